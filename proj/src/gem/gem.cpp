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

#include "psb/gem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "psb/error.hpp"
#include "../detail/disjoint_sets.hpp"

namespace psb {

namespace {

void check_labels(const std::vector<Label>& labels, std::uint32_t size, const char* which)
{
  if (labels.size() != size)
    throw StructuralError(std::string(which) + " label vector has size " +
                          std::to_string(labels.size()) + ", expected " + std::to_string(size));
  std::set<Label> seen;
  for (Label l : labels) {
    if (l != kNoLabel && !seen.insert(l).second)
      throw StructuralError(std::string(which) + " label " + std::to_string(l) +
                            " is attached to two chambers");
  }
}

} // namespace

Gem::Gem(unsigned n, std::vector<std::vector<std::uint32_t>> matchings,
         std::vector<Label> plus_labels, std::vector<Label> minus_labels)
: n_(n)
, matchings_(std::move(matchings))
, plus_labels_(std::move(plus_labels))
, minus_labels_(std::move(minus_labels))
{
  if (n_ < 1)
    throw StructuralError("dimension must be at least 1");
  if (matchings_.size() != n_ + 1)
    throw StructuralError("expected " + std::to_string(n_ + 1) + " matchings, got " +
                          std::to_string(matchings_.size()));
  size_ = static_cast<std::uint32_t>(matchings_.front().size());
  inverse_.assign(matchings_.size(), std::vector<std::uint32_t>(size_, size_));
  for (std::size_t c = 0; c < matchings_.size(); ++c) {
    if (matchings_[c].size() != size_)
      throw StructuralError("matching " + std::to_string(c) + " has the wrong length");
    for (std::uint32_t p = 0; p < size_; ++p) {
      const auto q = matchings_[c][p];
      if (q >= size_ || inverse_[c][q] != size_)
        throw StructuralError("matching " + std::to_string(c) + " is not a bijection");
      inverse_[c][q] = p;
    }
  }
  check_labels(plus_labels_, size_, "plus");
  check_labels(minus_labels_, size_, "minus");
}

Chamber Gem::neighbor(Chamber ch, std::size_t color) const
{
  if (ch.sign == Sign::plus)
    return {Sign::minus, matchings_[color][ch.index]};
  return {Sign::plus, inverse_[color][ch.index]};
}

std::optional<std::uint32_t> Gem::find_label(Sign sign, Label label) const
{
  const auto& labels = sign == Sign::plus ? plus_labels_ : minus_labels_;
  if (label == kNoLabel)
    return std::nullopt;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    return std::nullopt;
  return static_cast<std::uint32_t>(it - labels.begin());
}

bool Gem::fully_labeled() const
{
  auto full = [this](const std::vector<Label>& labels) {
    std::vector<bool> hit(size_, false);
    for (Label l : labels) {
      if (l == kNoLabel || l > size_)
        return false;
      hit[l - 1] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  };
  return full(plus_labels_) && full(minus_labels_);
}

Gem from_tuple(const ColoredTuple& g, Point min_size)
{
  const Point size = std::max(g.degree(), min_size);
  std::vector<std::vector<std::uint32_t>> matchings(g.colors(), std::vector<std::uint32_t>(size));
  for (std::size_t c = 0; c < g.colors(); ++c) {
    for (Point p = 1; p <= size; ++p)
      matchings[c][p - 1] = g[c](p) - 1;
  }
  std::vector<Label> labels(size);
  std::iota(labels.begin(), labels.end(), Label{1});
  return Gem(static_cast<unsigned>(g.colors() - 1), std::move(matchings), labels, labels);
}

ColoredTuple to_tuple(const Gem& gem)
{
  if (!gem.fully_labeled())
    throw PreconditionError("to_tuple needs bijective labels 1..L on both signs");
  std::vector<Permutation> perms;
  perms.reserve(gem.colors());
  for (std::size_t c = 0; c < gem.colors(); ++c) {
    std::vector<Permutation::Pair> pairs;
    pairs.reserve(gem.size());
    for (std::uint32_t p = 0; p < gem.size(); ++p)
      pairs.emplace_back(gem.plus_labels()[p], gem.minus_labels()[gem.match(c, p)]);
    perms.push_back(Permutation::from_pairs(std::move(pairs)));
  }
  return ColoredTuple(std::move(perms));
}

std::vector<Component> components(const Gem& gem, const std::vector<std::size_t>& colors)
{
  for (auto c : colors) {
    if (c >= gem.colors())
      throw PreconditionError("color " + std::to_string(c) + " out of range");
  }
  detail::DisjointSets sets(gem.chamber_count());
  for (auto c : colors) {
    for (std::uint32_t p = 0; p < gem.size(); ++p)
      sets.unite(p, gem.size() + std::size_t{gem.match(c, p)});
  }
  // Roots are minimal members, so grouping by root preserves first-chamber order.
  std::map<std::size_t, Component> groups;
  for (std::size_t i = 0; i < gem.chamber_count(); ++i)
    groups[sets.find(i)].push_back(gem.unflat(i));
  std::vector<Component> out;
  out.reserve(groups.size());
  for (auto& [root, comp] : groups)
    out.push_back(std::move(comp));
  return out;
}

std::vector<Component> components(const Gem& gem)
{
  std::vector<std::size_t> all(gem.colors());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return components(gem, all);
}

bool is_double_chamber(const Gem&, const Component& component)
{
  return component.size() == 2;
}

Gem remove_unlabeled_double_chambers(const Gem& gem)
{
  std::vector<bool> drop_plus(gem.size(), false);
  std::vector<bool> drop_minus(gem.size(), false);
  for (const auto& comp : components(gem)) {
    if (!is_double_chamber(gem, comp))
      continue;
    if (gem.label(comp[0]) != kNoLabel || gem.label(comp[1]) != kNoLabel)
      continue;
    for (const auto& ch : comp)
      (ch.sign == Sign::plus ? drop_plus : drop_minus)[ch.index] = true;
  }

  std::vector<std::uint32_t> new_plus(gem.size()), new_minus(gem.size());
  std::uint32_t kept = 0;
  for (std::uint32_t p = 0; p < gem.size(); ++p)
    new_plus[p] = drop_plus[p] ? gem.size() : kept++;
  kept = 0;
  for (std::uint32_t q = 0; q < gem.size(); ++q)
    new_minus[q] = drop_minus[q] ? gem.size() : kept++;

  std::vector<std::vector<std::uint32_t>> matchings(gem.colors(), std::vector<std::uint32_t>(kept));
  std::vector<Label> plus_labels(kept), minus_labels(kept);
  for (std::uint32_t p = 0; p < gem.size(); ++p) {
    if (drop_plus[p])
      continue;
    for (std::size_t c = 0; c < gem.colors(); ++c)
      matchings[c][new_plus[p]] = new_minus[gem.match(c, p)];
    plus_labels[new_plus[p]] = gem.plus_labels()[p];
  }
  for (std::uint32_t q = 0; q < gem.size(); ++q) {
    if (!drop_minus[q])
      minus_labels[new_minus[q]] = gem.minus_labels()[q];
  }
  return Gem(gem.dimension(), std::move(matchings), std::move(plus_labels), std::move(minus_labels));
}

Gem reverse_signs(const Gem& gem)
{
  std::vector<std::vector<std::uint32_t>> matchings(gem.colors(), std::vector<std::uint32_t>(gem.size()));
  for (std::size_t c = 0; c < gem.colors(); ++c) {
    for (std::uint32_t q = 0; q < gem.size(); ++q)
      matchings[c][q] = gem.match_inverse(c, q);
  }
  return Gem(gem.dimension(), std::move(matchings), gem.minus_labels(), gem.plus_labels());
}

Gem disjoint_union(const Gem& a, const Gem& b)
{
  if (a.dimension() != b.dimension())
    throw StructuralError("disjoint union of gems of different dimension");
  std::vector<std::vector<std::uint32_t>> matchings(a.colors());
  for (std::size_t c = 0; c < a.colors(); ++c) {
    matchings[c] = a.matching(c);
    for (auto q : b.matching(c))
      matchings[c].push_back(q + a.size());
  }
  auto plus = a.plus_labels();
  plus.insert(plus.end(), b.plus_labels().begin(), b.plus_labels().end());
  auto minus = a.minus_labels();
  minus.insert(minus.end(), b.minus_labels().begin(), b.minus_labels().end());
  return Gem(a.dimension(), std::move(matchings), std::move(plus), std::move(minus));
}

Gem relabel_storage(const Gem& gem, const std::vector<std::uint32_t>& plus_perm,
                    const std::vector<std::uint32_t>& minus_perm)
{
  if (plus_perm.size() != gem.size() || minus_perm.size() != gem.size())
    throw StructuralError("storage permutation has the wrong size");
  std::vector<std::vector<std::uint32_t>> matchings(gem.colors(), std::vector<std::uint32_t>(gem.size()));
  std::vector<Label> plus(gem.size()), minus(gem.size());
  for (std::uint32_t p = 0; p < gem.size(); ++p) {
    for (std::size_t c = 0; c < gem.colors(); ++c)
      matchings[c][plus_perm[p]] = minus_perm[gem.match(c, p)];
    plus[plus_perm[p]] = gem.plus_labels()[p];
    minus[minus_perm[p]] = gem.minus_labels()[p];
  }
  return Gem(gem.dimension(), std::move(matchings), std::move(plus), std::move(minus));
}

} // namespace psb
