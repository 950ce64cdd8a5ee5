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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psb/colored_tuple.hpp"

namespace psb {

using Label = std::uint32_t;          ///< 0 means "unlabeled"
inline constexpr Label kNoLabel = 0;

enum class Sign : std::uint8_t { plus, minus };

/// A chamber reference: sign plus a 0-based index among chambers of that sign.
struct Chamber {
  Sign sign;
  std::uint32_t index;

  friend bool operator==(const Chamber&, const Chamber&) = default;
  friend auto operator<=>(const Chamber&, const Chamber&) = default;
};

/// Graph-encoded colored normal pseudomanifold.
///
/// There are L plus-chambers and L minus-chambers. For each of the n+1 colors a
/// bijection sends plus-chamber p to the minus-chamber sharing its (n-1)-face of
/// that color; a plus-chamber can only ever be matched with a minus-chamber, so
/// the sign alternation holds by construction. Labels are stored per chamber.
class Gem {
public:
  Gem() = default;

  /// Validates the shape: n >= 1, n+1 matchings each a bijection of {0..L-1},
  /// label vectors of size L with injective nonzero entries.
  Gem(unsigned n, std::vector<std::vector<std::uint32_t>> matchings,
      std::vector<Label> plus_labels, std::vector<Label> minus_labels);

  unsigned dimension() const { return n_; }
  std::size_t colors() const { return matchings_.size(); }
  std::uint32_t size() const { return size_; }
  std::size_t chamber_count() const { return 2 * static_cast<std::size_t>(size_); }

  std::uint32_t match(std::size_t color, std::uint32_t plus) const { return matchings_[color][plus]; }
  std::uint32_t match_inverse(std::size_t color, std::uint32_t minus) const
  {
    return inverse_[color][minus];
  }
  const std::vector<std::uint32_t>& matching(std::size_t color) const { return matchings_[color]; }

  /// The chamber across the given-color face of `ch`.
  Chamber neighbor(Chamber ch, std::size_t color) const;

  Label label(Chamber ch) const
  {
    return ch.sign == Sign::plus ? plus_labels_[ch.index] : minus_labels_[ch.index];
  }
  const std::vector<Label>& plus_labels() const { return plus_labels_; }
  const std::vector<Label>& minus_labels() const { return minus_labels_; }
  std::optional<std::uint32_t> find_label(Sign sign, Label label) const;

  /// Every chamber carries a label and the labels of each sign are exactly 1..L.
  bool fully_labeled() const;

  /// Dense index: plus-chambers first, then minus-chambers.
  std::size_t flat(Chamber ch) const
  {
    return ch.sign == Sign::plus ? ch.index : size_ + static_cast<std::size_t>(ch.index);
  }
  Chamber unflat(std::size_t i) const
  {
    return i < size_ ? Chamber{Sign::plus, static_cast<std::uint32_t>(i)}
                     : Chamber{Sign::minus, static_cast<std::uint32_t>(i - size_)};
  }

  friend bool operator==(const Gem& a, const Gem& b)
  {
    return a.n_ == b.n_ && a.matchings_ == b.matchings_ && a.plus_labels_ == b.plus_labels_ &&
           a.minus_labels_ == b.minus_labels_;
  }

private:
  unsigned n_ = 1;
  std::uint32_t size_ = 0;
  std::vector<std::vector<std::uint32_t>> matchings_{{}, {}};
  std::vector<std::vector<std::uint32_t>> inverse_{{}, {}};
  std::vector<Label> plus_labels_;
  std::vector<Label> minus_labels_;
};

using Component = std::vector<Chamber>;

/// Gem of g with size max(degree(g), min_size); chamber i of each sign carries label i+1.
Gem from_tuple(const ColoredTuple& g, Point min_size = 0);

/// Inverse of from_tuple. Requires a fully labeled gem (PreconditionError otherwise).
ColoredTuple to_tuple(const Gem& gem);

/// Connected components of the subgraph spanned by the given colors (0-based).
/// Components are ordered by their first chamber; chambers inside a component are sorted.
std::vector<Component> components(const Gem& gem, const std::vector<std::size_t>& colors);
std::vector<Component> components(const Gem& gem);

/// Two chambers joined by all n+1 edges. `component` must come from the full-color partition.
bool is_double_chamber(const Gem& gem, const Component& component);

/// Drops every connected component that is a label-less double chamber.
/// Surviving chambers keep their relative order (ascending old index).
Gem remove_unlabeled_double_chambers(const Gem& gem);

/// Swaps chamber signs: plus-chambers become minus-chambers and every matching is inverted.
Gem reverse_signs(const Gem& gem);

/// Disjoint union; chambers of `b` follow those of `a` within each sign.
Gem disjoint_union(const Gem& a, const Gem& b);

/// Reindexes chambers: plus-chamber p moves to plus_perm[p], minus-chamber q to minus_perm[q].
Gem relabel_storage(const Gem& gem, const std::vector<std::uint32_t>& plus_perm,
                    const std::vector<std::uint32_t>& minus_perm);

} // namespace psb
