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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psb {

/// A positive integer moved by a permutation. Zero is never a valid point.
using Point = std::uint32_t;

/// A finitely supported bijection of the positive integers.
///
/// Only the moved points are stored, sorted by source, so an element of S(inf)
/// costs O(|support|). Every point outside the stored sources is fixed.
class Permutation {
public:
  using Pair = std::pair<Point, Point>;

  Permutation() = default;

  /// Builds from (source, target) pairs. Fixed points are dropped; the pairs
  /// must describe a bijection of their source set, otherwise StructuralError.
  static Permutation from_pairs(std::vector<Pair> pairs);

  /// One-line notation: images[i] is the image of i + 1.
  static Permutation from_images(const std::vector<Point>& images);

  /// A single cycle (c0 c1 ... ck), i.e. c0 -> c1 -> ... -> ck -> c0.
  static Permutation from_cycle(const std::vector<Point>& cycle);

  Point operator()(Point x) const;

  bool is_identity() const { return map_.empty(); }

  /// Largest moved point, 0 for the identity.
  Point degree() const { return map_.empty() ? 0 : map_.back().first; }

  std::vector<Point> support() const;
  const std::vector<Pair>& pairs() const { return map_; }

  /// Membership in K(alpha): no point of {1..alpha} is moved.
  bool fixes_prefix(Point alpha) const { return map_.empty() || map_.front().first > alpha; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Pair> map_;
};

/// Function composition: the result sends x to p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// The block swap {sigma+1..sigma+j} <-> {sigma+j+1..sigma+2j}; an involution in K(sigma).
Permutation theta(Point sigma, Point j);

/// Disjoint cycles, each starting at its least element, sorted by least element.
std::vector<std::vector<Point>> cycles(const Permutation& p);

/// Parses disjoint-cycle notation such as "(1 2)(3 5 4)"; "e" is the identity.
Permutation parse_permutation(std::string_view text);

/// Canonical cycle notation; "e" for the identity.
std::string format_permutation(const Permutation& p);

} // namespace psb
