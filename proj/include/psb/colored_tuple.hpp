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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psb/permutation.hpp"

namespace psb {

/// An element of G = S(inf)^{n+1}: one permutation per color.
///
/// Products of tuples apply the left factor first: in g * h the coordinate
/// maps x to h(g(x)). With this order left multiplication by K(alpha)
/// relabels plus-chambers and right multiplication by K(beta) relabels
/// minus-chambers of the associated pseudomanifold.
class ColoredTuple {
public:
  /// Requires at least two colors.
  explicit ColoredTuple(std::vector<Permutation> perms);

  static ColoredTuple identity(std::size_t colors);
  /// The diagonal element (k, k, ..., k).
  static ColoredTuple diagonal(const Permutation& k, std::size_t colors);

  std::size_t colors() const { return perms_.size(); }
  /// Smallest L with every support inside {1..L}.
  Point degree() const;

  const Permutation& operator[](std::size_t color) const { return perms_[color]; }
  const std::vector<Permutation>& perms() const { return perms_; }

  friend bool operator==(const ColoredTuple&, const ColoredTuple&) = default;

private:
  std::vector<Permutation> perms_;
};

/// Coordinatewise product, left factor applied first.
ColoredTuple multiply(const ColoredTuple& g, const ColoredTuple& h);

/// g * theta_beta[j] * h for an explicit block size j.
ColoredTuple interleave(const ColoredTuple& g, const ColoredTuple& h, Point beta, Point j);

/// Representative of the double-coset product g o h in K(alpha)\G/K(gamma), with
/// L = max(degree(g), degree(h), alpha, beta, gamma, min_size) and j = L - beta.
ColoredTuple dc_product(const ColoredTuple& g, const ColoredTuple& h, Point alpha, Point beta,
                        Point gamma, Point min_size = 0);

/// Coordinatewise inverse; represents the involution of the double coset.
ColoredTuple dc_involution(const ColoredTuple& g);

/// Seeded tuple, uniform per coordinate over S(L).
ColoredTuple random_tuple(Point size, std::size_t colors, std::uint64_t seed);

/// Parses "(1 2); e; (2 3)": one cycle string per color.
ColoredTuple parse_tuple(std::string_view text);
std::string format_tuple(const ColoredTuple& g);

/// A double coset K(alpha) g K(beta), i.e. a morphism beta -> alpha.
/// Equality is decided by canonical pseudobordism keys (see pseudobordism.hpp),
/// never by comparing representatives.
struct DoubleCoset {
  Point alpha = 0;
  Point beta = 0;
  ColoredTuple representative;
};

} // namespace psb
