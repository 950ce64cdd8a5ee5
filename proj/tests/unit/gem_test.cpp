// Copyright 2026 The psb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <numeric>

#include "psb/error.hpp"
#include "psb/gem.hpp"
#include "psb/pseudobordism.hpp"
#include "../support/generators.hpp"

using namespace psb;

namespace {

// Components of an n = 1 gem found by walking the alternating 2-colored cycles.
std::size_t walk_components(const Gem& gem)
{
  std::vector<bool> seen(gem.size(), false);
  std::size_t count = 0;
  for (std::uint32_t start = 0; start < gem.size(); ++start) {
    if (seen[start])
      continue;
    ++count;
    for (std::uint32_t p = start; !seen[p]; p = gem.match_inverse(1, gem.match(0, p)))
      seen[p] = true;
  }
  return count;
}

std::size_t cycle_count(const Permutation& w, Point n)
{
  std::size_t moved = 0;
  for (const auto& c : cycles(w))
    moved += c.size();
  return cycles(w).size() + (n - moved);
}

} // namespace

TEST_CASE("from_tuple examples")
{
  SECTION("identity with one chamber pair is a double chamber")
  {
    const auto gem = from_tuple(ColoredTuple::identity(3), 1);
    CHECK(gem.size() == 1);
    CHECK(gem.chamber_count() == 2);
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(gem.match(c, 0) == 0);
    const auto comps = components(gem);
    REQUIRE(comps.size() == 1);
    CHECK(is_double_chamber(gem, comps[0]));
  }
  SECTION("n = 1, ((1 2); e) is one alternating 4-cycle")
  {
    const auto gem = from_tuple(parse_tuple("(1 2); e"));
    REQUIRE(gem.size() == 2);
    // plus1 -c0- minus2 -c1- plus2 -c0- minus1 -c1- plus1
    CHECK(gem.neighbor({Sign::plus, 0}, 0) == Chamber{Sign::minus, 1});
    CHECK(gem.neighbor({Sign::minus, 1}, 1) == Chamber{Sign::plus, 1});
    CHECK(gem.neighbor({Sign::plus, 1}, 0) == Chamber{Sign::minus, 0});
    CHECK(gem.neighbor({Sign::minus, 0}, 1) == Chamber{Sign::plus, 0});
    const auto comps = components(gem);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 4);
    CHECK_FALSE(is_double_chamber(gem, comps[0]));
    CHECK(to_tuple(gem) == parse_tuple("(1 2); e"));
  }
  SECTION("labels are natural")
  {
    const auto gem = from_tuple(parse_tuple("(1 3); (2 3); e"));
    CHECK(gem.fully_labeled());
    for (std::uint32_t i = 0; i < gem.size(); ++i) {
      CHECK(gem.label({Sign::plus, i}) == i + 1);
      CHECK(gem.label({Sign::minus, i}) == i + 1);
    }
    CHECK(gem.find_label(Sign::plus, 2) == 1u);
    CHECK_FALSE(gem.find_label(Sign::minus, 7).has_value());
  }
}

TEST_CASE("round trip and chamber count on random tuples")
{
  psbtest::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto size = static_cast<Point>(rng.between(0, 8));
    const auto g = psbtest::random_tuple(rng, size, rng.between(2, 4));
    const auto gem = from_tuple(g, size);
    CHECK(gem.chamber_count() == 2 * static_cast<std::size_t>(size));
    CHECK(to_tuple(gem) == g);
  }
}

TEST_CASE("to_tuple needs full labels")
{
  const auto gem = from_tuple(parse_tuple("(1 2); e"));
  auto plus = gem.plus_labels();
  plus[0] = kNoLabel;
  const Gem partial(1, {gem.matching(0), gem.matching(1)}, plus, gem.minus_labels());
  CHECK_FALSE(partial.fully_labeled());
  CHECK_THROWS_AS(to_tuple(partial), PreconditionError);
}

TEST_CASE("relabeling plus chambers multiplies on the label side")
{
  psbtest::Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const auto size = static_cast<Point>(rng.between(1, 6));
    const auto colors = rng.between(2, 4);
    const auto g = psbtest::random_tuple(rng, size, colors);
    const auto u = psbtest::random_perm_on(rng, 1, size);
    const auto gem = from_tuple(g, size);
    auto plus = gem.plus_labels();
    for (auto& l : plus)
      l = u(l);
    std::vector<std::vector<std::uint32_t>> m;
    for (std::size_t c = 0; c < colors; ++c)
      m.push_back(gem.matching(c));
    const Gem relabeled(gem.dimension(), m, plus, gem.minus_labels());
    const auto moved = to_tuple(relabeled);
    CHECK(moved == multiply(ColoredTuple::diagonal(inverse(u), colors), g));
    // Same unlabeled gem.
    CHECK(canonical_form(forget_labels(relabeled, 0, 0)) == canonical_form(forget_labels(gem, 0, 0)));
  }
}

TEST_CASE("construction is validated")
{
  CHECK_THROWS_AS(Gem(0, {{0}}, {1}, {1}), StructuralError);
  CHECK_THROWS_AS(Gem(2, {{0}, {0}}, {1}, {1}), StructuralError);
  CHECK_THROWS_AS(Gem(1, {{0, 0}, {0, 1}}, {1, 2}, {1, 2}), StructuralError);
  CHECK_THROWS_AS(Gem(1, {{0, 2}, {0, 1}}, {1, 2}, {1, 2}), StructuralError);
  CHECK_THROWS_AS(Gem(1, {{0, 1}, {0}}, {1, 2}, {1, 2}), StructuralError);
  CHECK_THROWS_AS(Gem(1, {{0, 1}, {0, 1}}, {1, 1}, {1, 2}), StructuralError);
  CHECK_THROWS_AS(Gem(1, {{0, 1}, {0, 1}}, {1}, {1, 2}), StructuralError);
  CHECK_NOTHROW(Gem(1, {{1, 0}, {0, 1}}, {0, 0}, {0, 5}));
}

TEST_CASE("components")
{
  SECTION("empty color subset gives singletons")
  {
    const auto gem = from_tuple(parse_tuple("(1 2 3); (1 3)"));
    CHECK(components(gem, {}).size() == 6);
  }
  SECTION("color out of range")
  {
    CHECK_THROWS_AS(components(from_tuple(ColoredTuple::identity(2), 1), {2}), PreconditionError);
  }
  SECTION("n = 1: components equal cycles of g2^-1 g1, against a walk oracle")
  {
    psbtest::Rng rng(43);
    for (int t = 0; t < 200; ++t) {
      const auto size = static_cast<Point>(rng.between(1, 6));
      const auto g = psbtest::random_tuple(rng, size, 2);
      const auto gem = from_tuple(g, size);
      const auto n = components(gem).size();
      CHECK(n == walk_components(gem));
      CHECK(n == cycle_count(compose(inverse(g[1]), g[0]), size));
    }
  }
  SECTION("components are sorted and partition the chambers")
  {
    psbtest::Rng rng(44);
    for (int t = 0; t < 50; ++t) {
      const auto size = static_cast<Point>(rng.between(1, 6));
      const auto gem = from_tuple(psbtest::random_tuple(rng, size, rng.between(2, 4)), size);
      std::size_t total = 0;
      std::vector<std::size_t> firsts;
      for (const auto& comp : components(gem)) {
        total += comp.size();
        CHECK(std::is_sorted(comp.begin(), comp.end()));
        firsts.push_back(gem.flat(comp.front()));
      }
      CHECK(total == gem.chamber_count());
      CHECK(std::is_sorted(firsts.begin(), firsts.end()));
    }
  }
}

TEST_CASE("double chambers are exactly the plus chambers fixed by every matching")
{
  psbtest::Rng rng(45);
  for (int t = 0; t < 200; ++t) {
    const auto size = static_cast<Point>(rng.between(1, 6));
    const auto colors = rng.between(2, 4);
    // Bias towards agreement so double chambers actually occur.
    auto g = psbtest::random_tuple(rng, size, colors);
    if (rng.below(2) == 0) {
      std::vector<Permutation> same(colors, g[0]);
      same[rng.below(colors)] = psbtest::random_perm_on(rng, 1, size);
      g = ColoredTuple(same);
    }
    const auto gem = from_tuple(g, size);
    for (const auto& comp : components(gem)) {
      const auto p = comp.front().index;
      bool agree = true;
      for (std::size_t c = 1; c < colors; ++c)
        agree = agree && gem.match(c, p) == gem.match(0, p);
      CHECK(is_double_chamber(gem, comp) == agree);
    }
  }
}

TEST_CASE("forget_labels examples")
{
  const auto one = from_tuple(ColoredTuple::identity(3), 1);
  CHECK(forget_labels(one, 0, 0).gem().size() == 0);
  const auto kept = forget_labels(one, 1, 0);
  CHECK(kept.gem().size() == 1);
  CHECK(kept.gem().plus_labels() == std::vector<Label>{1});
  CHECK(kept.gem().minus_labels() == std::vector<Label>{kNoLabel});
  CHECK(forget_labels(from_tuple(parse_tuple("(1 2); (1 2)")), 0, 0).gem().size() == 0);
  CHECK_THROWS_AS(forget_labels(one, 2, 0), PreconditionError);
}

TEST_CASE("sign reversal, disjoint union and storage relabeling")
{
  psbtest::Rng rng(46);
  for (int t = 0; t < 50; ++t) {
    const auto size = static_cast<Point>(rng.between(1, 6));
    const auto colors = rng.between(2, 4);
    const auto g = psbtest::random_tuple(rng, size, colors);
    const auto gem = from_tuple(g, size);
    CHECK(reverse_signs(reverse_signs(gem)) == gem);
    CHECK(to_tuple(reverse_signs(gem)) == dc_involution(g));

    const auto h = psbtest::random_tuple(rng, rng.between(1, 4), colors);
    const auto u = disjoint_union(psbtest::strip_labels(gem), psbtest::strip_labels(from_tuple(h, 1)));
    CHECK(components(u).size() == components(gem).size() + components(from_tuple(h, 1)).size());

    std::vector<std::uint32_t> pp(size), mp(size);
    std::iota(pp.begin(), pp.end(), 0u);
    std::iota(mp.begin(), mp.end(), 0u);
    std::shuffle(pp.begin(), pp.end(), rng.engine());
    std::shuffle(mp.begin(), mp.end(), rng.engine());
    // Labels travel with their chambers, so the tuple is unchanged.
    CHECK(to_tuple(relabel_storage(gem, pp, mp)) == g);
  }
  CHECK_THROWS_AS(disjoint_union(from_tuple(ColoredTuple::identity(2), 1),
                                 from_tuple(ColoredTuple::identity(3), 1)),
                  StructuralError);
}

TEST_CASE("removing label-less double chambers keeps order")
{
  // Plus chambers 1 and 3 form double chambers, 2 and 4 a 4-cycle.
  const auto g = parse_tuple("(2 4); e");
  const auto gem = from_tuple(g, 4);
  std::vector<Label> plus{0, 1, 0, 0}, minus{0, 0, 0, 0};
  std::vector<std::vector<std::uint32_t>> m{gem.matching(0), gem.matching(1)};
  const auto cleaned = remove_unlabeled_double_chambers(Gem(1, m, plus, minus));
  CHECK(cleaned.size() == 2);
  CHECK(cleaned.plus_labels() == std::vector<Label>{1, 0});
  CHECK(components(cleaned).size() == 1);
}
