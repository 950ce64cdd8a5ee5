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
#include <vector>

#include "psb/canonical.hpp"
#include "psb/colored_tuple.hpp"
#include "psb/gem.hpp"

namespace psb {

/// A morphism source -> target of the pseudobordism category: a colored normal
/// pseudomanifold (as a Gem) whose plus-chambers carry the labels 1..target and
/// whose minus-chambers carry the labels 1..source.
///
/// Invariants checked on construction:
///  - plus labels are exactly {1..target}, minus labels exactly {1..source};
///  - every double-chamber component carries at least one label.
///
/// Two morphisms are equal iff their canonical forms agree; operator== does that.
class Pseudobordism {
public:
  /// Validates and wraps; StructuralError on violation.
  Pseudobordism(Gem gem, Point source, Point target);

  unsigned dimension() const { return gem_.dimension(); }
  Point source() const { return source_; }
  Point target() const { return target_; }
  const Gem& gem() const { return gem_; }

  friend bool operator==(const Pseudobordism& a, const Pseudobordism& b);

private:
  Gem gem_;
  Point source_;
  Point target_;
};

/// Keeps plus labels <= alpha and minus labels <= beta of a fully labeled gem and
/// deletes the label-less double chambers. Requires alpha, beta <= L.
Pseudobordism forget_labels(const Gem& gem, Point alpha, Point beta);

/// sigma o lambda for sigma: beta -> alpha and lambda: gamma -> beta.
///
/// The minus-chamber of sigma labeled s and the plus-chamber of lambda labeled s
/// are removed and their faces of equal color are joined, which concatenates the
/// matchings through the removed pair. The result needs no normalization in this
/// encoding; label-less double chambers are then dropped.
Pseudobordism compose(const Pseudobordism& sigma, const Pseudobordism& lambda);

/// Swaps chamber signs, hence source and target.
Pseudobordism involution(const Pseudobordism& sigma);

/// alpha double chambers, the s-th labeled s on both sides.
Pseudobordism identity(unsigned dimension, Point alpha);

/// Edge-colored chamber graph: plus-chambers 0..L-1, minus-chambers L..2L-1.
/// Labeled chambers get unique classes; unlabeled chambers are classed by sign.
ColoredGraph chamber_graph(const Gem& gem);

/// Canonical byte string; invariant under reindexing of unlabeled chambers.
std::vector<std::uint8_t> canonical_form(const Pseudobordism& sigma);
bool is_isomorphic(const Pseudobordism& a, const Pseudobordism& b);

/// forget_labels o from_tuple on the representative.
Pseudobordism from_double_coset(const DoubleCoset& dc);

/// Completes the partial labels in ascending chamber order and reads off a representative.
DoubleCoset to_double_coset(const Pseudobordism& sigma);

/// Equality of double cosets through canonical forms.
bool same_double_coset(const DoubleCoset& a, const DoubleCoset& b);

} // namespace psb
