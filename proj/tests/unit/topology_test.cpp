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

#include <bit>
#include <numeric>

#include "psb/error.hpp"
#include "psb/gem.hpp"
#include "psb/topology.hpp"
#include "../support/generators.hpp"

using namespace psb;

namespace {

// One colored triangle with its faces; not closed.
SimplicialCellComplex lone_triangle()
{
  std::vector<Face> faces{
      {0, 0, {0}, {}},       {1, 0, {1}, {}},       {2, 0, {2}, {}},
      {3, 1, {0, 1}, {0, 1}}, {4, 1, {0, 2}, {0, 2}}, {5, 1, {1, 2}, {1, 2}},
      {6, 2, {0, 1, 2}, {3, 4, 5}},
  };
  return SimplicialCellComplex(2, faces, {{6, 1}});
}

} // namespace

TEST_CASE("complex of the double chamber")
{
  const auto cx = build_complex(from_tuple(ColoredTuple::identity(3), 1));
  CHECK(f_vector(cx) == std::vector<std::size_t>{3, 3, 2});
  CHECK(euler_characteristic(cx) == 2);
  CHECK(is_pseudomanifold(cx).ok);
  CHECK(is_normal(cx));

  for (const auto& f : cx.faces())
    if (f.dim == 0) {
      // Link of a vertex of the 2-sphere is a circle with two vertices.
      const auto l = link(cx, f.id);
      CHECK(l.dimension() == 1);
      CHECK(f_vector(l) == std::vector<std::size_t>{2, 2});
    }
  CHECK_THROWS_AS(link(cx, 999), PreconditionError);
}

TEST_CASE("complex of the n = 1 four-cycle is a circle")
{
  const auto cx = build_complex(from_tuple(parse_tuple("(1 2); e")));
  CHECK(f_vector(cx) == std::vector<std::size_t>{4, 4});
  CHECK(euler_characteristic(cx) == 0);
  CHECK(is_pseudomanifold(cx).ok);
}

TEST_CASE("a lone chamber is not a pseudomanifold")
{
  const auto cx = lone_triangle();
  const auto report = is_pseudomanifold(cx);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.diagnostic.empty());
  CHECK_THROWS_AS(normalize(cx), PreconditionError);
}

TEST_CASE("malformed face posets are rejected")
{
  // Edge with a repeated boundary vertex.
  CHECK_THROWS_AS(SimplicialCellComplex(1, {{0, 0, {}, {}}, {1, 1, {}, {0, 0}}}), StructuralError);
  // Wrong boundary size.
  CHECK_THROWS_AS(SimplicialCellComplex(1, {{0, 0, {}, {}}, {1, 1, {}, {0}}}), StructuralError);
  // Unknown boundary id.
  CHECK_THROWS_AS(SimplicialCellComplex(1, {{0, 0, {}, {}}, {1, 1, {}, {0, 7}}}), StructuralError);
  // Duplicate id.
  CHECK_THROWS_AS(SimplicialCellComplex(0, {{0, 0, {}, {}}, {0, 0, {}, {}}}), StructuralError);
}

TEST_CASE("face counts of random gem complexes")
{
  psbtest::Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    const auto size = static_cast<Point>(rng.between(1, 6));
    const auto colors = rng.between(2, 4);
    const auto gem = from_tuple(psbtest::random_tuple(rng, size, colors), size);
    const auto cx = build_complex(gem);
    const auto f = f_vector(cx);
    REQUIRE(f.size() == colors);

    // A face with vertex colors B is a component over the complementary colors.
    std::vector<std::size_t> expect(colors, 0);
    for (unsigned mask = 1; mask < (1u << colors); ++mask) {
      std::vector<std::size_t> rest;
      for (std::size_t c = 0; c < colors; ++c)
        if (!(mask & (1u << c)))
          rest.push_back(c);
      expect[static_cast<std::size_t>(std::popcount(mask)) - 1] += components(gem, rest).size();
    }
    CHECK(f == expect);

    std::int64_t chi = 0;
    for (std::size_t d = 0; d < f.size(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
    CHECK(euler_characteristic(cx) == chi);

    CHECK(psbtest::poset_components(cx) == components(gem).size());

    // Every codimension-1 face has a two-point link.
    for (const auto& face : cx.faces())
      if (face.dim == static_cast<int>(colors) - 2)
        CHECK(f_vector(link(cx, face.id)) == std::vector<std::size_t>{2});
  }
}

TEST_CASE("euler characteristic is additive over disjoint unions")
{
  psbtest::Rng rng(62);
  for (int t = 0; t < 30; ++t) {
    const auto colors = rng.between(2, 4);
    const auto a = from_tuple(psbtest::random_tuple(rng, rng.between(1, 4), colors), 1);
    const auto b = from_tuple(psbtest::random_tuple(rng, rng.between(1, 4), colors), 1);
    CHECK(euler_characteristic(build_complex(disjoint_union(psbtest::strip_labels(a), psbtest::strip_labels(b)))) ==
          euler_characteristic(build_complex(a)) + euler_characteristic(build_complex(b)));
  }
}

TEST_CASE("normalization")
{
  SECTION("two spheres pinched at a vertex come apart")
  {
    const auto separate = build_complex(from_tuple(ColoredTuple::identity(3), 2));
    std::vector<FaceId> red;
    for (const auto& f : separate.faces())
      if (f.dim == 0 && f.colors == std::vector<int>{0})
        red.push_back(f.id);
    REQUIRE(red.size() == 2);
    const auto pinched = psbtest::pinch(separate, red[0], red[1]);
    CHECK(is_pseudomanifold(pinched).ok);
    CHECK_FALSE(is_normal(pinched));
    const auto defects = normality_defects(pinched);
    REQUIRE(defects.size() == 1);
    CHECK(defects[0].first == red[0]);
    CHECK(defects[0].second == 2);

    const auto fixed = normalize(pinched);
    CHECK(is_normal(fixed));
    CHECK(f_vector(fixed) == std::vector<std::size_t>{6, 6, 4});
    CHECK(euler_characteristic(fixed) == 4);
    CHECK(is_isomorphic(fixed, separate));
    CHECK(fixed.signs().size() == 4);
  }
  SECTION("ids are renumbered by dimension")
  {
    const auto cx = normalize(build_complex(from_tuple(parse_tuple("(1 2); (2 3); e"))));
    int last = -1;
    for (std::size_t i = 0; i < cx.faces().size(); ++i) {
      CHECK(cx.faces()[i].id == static_cast<FaceId>(i));
      CHECK(cx.faces()[i].dim >= last);
      last = cx.faces()[i].dim;
    }
  }
  SECTION("idempotent and isomorphism-preserving on normal complexes")
  {
    psbtest::Rng rng(63);
    for (int t = 0; t < 30; ++t) {
      const auto size = static_cast<Point>(rng.between(1, 5));
      const auto cx = build_complex(from_tuple(psbtest::random_tuple(rng, size, rng.between(2, 4)), size));
      const auto once = normalize(cx);
      CHECK(f_vector(once) == f_vector(cx));
      CHECK(is_isomorphic(once, cx));
      CHECK(is_isomorphic(normalize(once), once));
    }
  }
}

TEST_CASE("chamber gem of a built complex is the gem up to isomorphism")
{
  psbtest::Rng rng(64);
  for (int t = 0; t < 30; ++t) {
    const auto size = static_cast<Point>(rng.between(1, 5));
    const auto colors = rng.between(2, 4);
    const auto gem = from_tuple(psbtest::random_tuple(rng, size, colors), size);
    const auto back = chamber_gem(build_complex(gem));
    CHECK(back.size() == gem.size());
    CHECK(back.colors() == gem.colors());
    CHECK(components(back).size() == components(gem).size());
  }
  CHECK_THROWS_AS(chamber_gem(lone_triangle()), PreconditionError);
}

TEST_CASE("non-isomorphic complexes are told apart")
{
  const auto sphere = build_complex(from_tuple(ColoredTuple::identity(3), 1));
  const auto two = build_complex(from_tuple(ColoredTuple::identity(3), 2));
  CHECK_FALSE(is_isomorphic(sphere, two));
  const auto a = build_complex(from_tuple(parse_tuple("(1 2); e"), 2));
  const auto b = build_complex(from_tuple(parse_tuple("(1 2); (1 2)"), 2));
  CHECK_FALSE(is_isomorphic(a, b));

  // Reindexing the chambers gives an isomorphic complex.
  psbtest::Rng rng(65);
  for (int t = 0; t < 30; ++t) {
    const auto size = static_cast<Point>(rng.between(1, 5));
    const auto gem = from_tuple(psbtest::random_tuple(rng, size, rng.between(2, 4)), size);
    std::vector<std::uint32_t> pp(size), mp(size);
    std::iota(pp.begin(), pp.end(), 0u);
    std::iota(mp.begin(), mp.end(), 0u);
    std::shuffle(pp.begin(), pp.end(), rng.engine());
    std::shuffle(mp.begin(), mp.end(), rng.engine());
    CHECK(complex_canonical_form(build_complex(relabel_storage(gem, pp, mp))) ==
          complex_canonical_form(build_complex(gem)));
  }
}
