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

#include "psb/pseudobordism.hpp"

#include <algorithm>
#include <string>

#include "psb/error.hpp"

namespace psb {

namespace {

constexpr std::uint64_t kUnlabeledClass = std::uint64_t{1} << 40;

void require_exact_labels(const std::vector<Label>& labels, Point count, const char* which)
{
  std::vector<bool> hit(count, false);
  for (Label l : labels) {
    if (l == kNoLabel)
      continue;
    if (l > count)
      throw StructuralError(std::string(which) + " label " + std::to_string(l) +
                            " exceeds the object " + std::to_string(count));
    hit[l - 1] = true;
  }
  for (Point s = 0; s < count; ++s) {
    if (!hit[s])
      throw StructuralError(std::string(which) + " label " + std::to_string(s + 1) +
                            " is not attached to any chamber");
  }
}

} // namespace

Pseudobordism::Pseudobordism(Gem gem, Point source, Point target)
: gem_(std::move(gem))
, source_(source)
, target_(target)
{
  require_exact_labels(gem_.plus_labels(), target_, "plus");
  require_exact_labels(gem_.minus_labels(), source_, "minus");
  for (const auto& comp : components(gem_)) {
    if (is_double_chamber(gem_, comp) && gem_.label(comp[0]) == kNoLabel &&
        gem_.label(comp[1]) == kNoLabel)
      throw StructuralError("double chamber without labels at plus-chamber " +
                            std::to_string(comp[0].index + 1));
  }
}

bool operator==(const Pseudobordism& a, const Pseudobordism& b)
{
  return canonical_form(a) == canonical_form(b);
}

Pseudobordism forget_labels(const Gem& gem, Point alpha, Point beta)
{
  if (!gem.fully_labeled())
    throw PreconditionError("forget_labels needs a fully labeled gem");
  if (alpha > gem.size() || beta > gem.size())
    throw PreconditionError("objects (" + std::to_string(alpha) + ", " + std::to_string(beta) +
                            ") exceed the chamber count " + std::to_string(gem.size()));
  auto plus = gem.plus_labels();
  auto minus = gem.minus_labels();
  for (auto& l : plus)
    if (l > alpha)
      l = kNoLabel;
  for (auto& l : minus)
    if (l > beta)
      l = kNoLabel;
  std::vector<std::vector<std::uint32_t>> matchings;
  for (std::size_t c = 0; c < gem.colors(); ++c)
    matchings.push_back(gem.matching(c));
  Gem partial(gem.dimension(), std::move(matchings), std::move(plus), std::move(minus));
  return Pseudobordism(remove_unlabeled_double_chambers(partial), beta, alpha);
}

Pseudobordism compose(const Pseudobordism& sigma, const Pseudobordism& lambda)
{
  if (sigma.dimension() != lambda.dimension())
    throw StructuralError("cannot compose bordisms of dimension " +
                          std::to_string(sigma.dimension()) + " and " +
                          std::to_string(lambda.dimension()));
  if (sigma.source() != lambda.target())
    throw StructuralError("object mismatch: source " + std::to_string(sigma.source()) +
                          " vs target " + std::to_string(lambda.target()));

  const Gem& a = sigma.gem();
  const Gem& b = lambda.gem();
  const Point glued = sigma.source();

  // New plus-chambers: all of a, then the unlabeled plus-chambers of b.
  // New minus-chambers: the unlabeled minus-chambers of a, then all of b.
  const std::uint32_t kept_a = a.size() - glued;
  const std::uint32_t size = a.size() + b.size() - glued;
  std::vector<std::uint32_t> a_minus(a.size(), size), b_plus(b.size(), size);
  std::uint32_t next = 0;
  for (std::uint32_t q = 0; q < a.size(); ++q)
    if (a.minus_labels()[q] == kNoLabel)
      a_minus[q] = next++;
  next = a.size();
  for (std::uint32_t p = 0; p < b.size(); ++p)
    if (b.plus_labels()[p] == kNoLabel)
      b_plus[p] = next++;

  // Plus-chamber of b carrying each glued label.
  std::vector<std::uint32_t> b_by_label(glued + 1, 0);
  for (std::uint32_t p = 0; p < b.size(); ++p)
    if (b.plus_labels()[p] != kNoLabel)
      b_by_label[b.plus_labels()[p]] = p;

  std::vector<std::vector<std::uint32_t>> matchings(a.colors(), std::vector<std::uint32_t>(size));
  for (std::size_t c = 0; c < a.colors(); ++c) {
    for (std::uint32_t p = 0; p < a.size(); ++p) {
      const auto q = a.match(c, p);
      const Label s = a.minus_labels()[q];
      matchings[c][p] = s == kNoLabel ? a_minus[q] : kept_a + b.match(c, b_by_label[s]);
    }
    for (std::uint32_t p = 0; p < b.size(); ++p) {
      if (b_plus[p] != size)
        matchings[c][b_plus[p]] = kept_a + b.match(c, p);
    }
  }

  std::vector<Label> plus(size, kNoLabel), minus(size, kNoLabel);
  std::copy(a.plus_labels().begin(), a.plus_labels().end(), plus.begin());
  std::copy(b.minus_labels().begin(), b.minus_labels().end(), minus.begin() + kept_a);

  Gem glued_gem(a.dimension(), std::move(matchings), std::move(plus), std::move(minus));
  return Pseudobordism(remove_unlabeled_double_chambers(glued_gem), lambda.source(), sigma.target());
}

Pseudobordism involution(const Pseudobordism& sigma)
{
  return Pseudobordism(reverse_signs(sigma.gem()), sigma.target(), sigma.source());
}

Pseudobordism identity(unsigned dimension, Point alpha)
{
  std::vector<std::uint32_t> id(alpha);
  std::vector<Label> labels(alpha);
  for (Point s = 0; s < alpha; ++s) {
    id[s] = s;
    labels[s] = s + 1;
  }
  std::vector<std::vector<std::uint32_t>> matchings(dimension + 1, id);
  return Pseudobordism(Gem(dimension, std::move(matchings), labels, labels), alpha, alpha);
}

ColoredGraph chamber_graph(const Gem& gem)
{
  ColoredGraph g;
  g.colors = gem.colors();
  const std::size_t n = gem.chamber_count();
  g.vertex_class.resize(n);
  g.adjacency.resize(n * g.colors);
  for (std::size_t v = 0; v < n; ++v) {
    const auto ch = gem.unflat(v);
    const std::uint64_t sign = ch.sign == Sign::plus ? 0 : 1;
    const Label l = gem.label(ch);
    g.vertex_class[v] = l == kNoLabel ? kUnlabeledClass + sign : 2 * std::uint64_t{l} + sign;
    for (std::size_t c = 0; c < g.colors; ++c)
      g.adjacency[v * g.colors + c] = static_cast<std::int64_t>(gem.flat(gem.neighbor(ch, c)));
  }
  return g;
}

std::vector<std::uint8_t> canonical_form(const Pseudobordism& sigma)
{
  std::vector<std::uint8_t> out;
  auto put32 = [&out](std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
      out.push_back(static_cast<std::uint8_t>(v >> shift));
  };
  put32(sigma.dimension());
  put32(sigma.source());
  put32(sigma.target());
  const auto body = canonical_code(chamber_graph(sigma.gem()));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

bool is_isomorphic(const Pseudobordism& a, const Pseudobordism& b)
{
  return canonical_form(a) == canonical_form(b);
}

Pseudobordism from_double_coset(const DoubleCoset& dc)
{
  const Gem full = from_tuple(dc.representative, std::max(dc.alpha, dc.beta));
  return forget_labels(full, dc.alpha, dc.beta);
}

DoubleCoset to_double_coset(const Pseudobordism& sigma)
{
  const Gem& gem = sigma.gem();
  auto plus = gem.plus_labels();
  auto minus = gem.minus_labels();
  Label next = sigma.target();
  for (auto& l : plus)
    if (l == kNoLabel)
      l = ++next;
  next = sigma.source();
  for (auto& l : minus)
    if (l == kNoLabel)
      l = ++next;
  std::vector<std::vector<std::uint32_t>> matchings;
  for (std::size_t c = 0; c < gem.colors(); ++c)
    matchings.push_back(gem.matching(c));
  const Gem full(gem.dimension(), std::move(matchings), std::move(plus), std::move(minus));
  return DoubleCoset{sigma.target(), sigma.source(), to_tuple(full)};
}

bool same_double_coset(const DoubleCoset& a, const DoubleCoset& b)
{
  return a.alpha == b.alpha && a.beta == b.beta &&
         canonical_form(from_double_coset(a)) == canonical_form(from_double_coset(b));
}

} // namespace psb
