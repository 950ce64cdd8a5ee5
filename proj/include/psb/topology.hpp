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
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "psb/gem.hpp"

namespace psb {

using FaceId = std::int64_t;

/// One face of a simplicial cell complex. `colors` lists the vertex colors of the
/// face (sorted, dim+1 entries) or is empty for uncolored complexes.
struct Face {
  FaceId id = 0;
  int dim = 0;
  std::vector<int> colors;
  std::vector<FaceId> boundary;
};

/// A simplicial cell complex stored as a face poset.
///
/// Only the combinatorics are kept: every d-face (d >= 1) lists its d+1 distinct
/// (d-1)-faces, and the affine gluing maps are implicit. Chambers (top faces)
/// may carry a sign, +1 or -1.
class SimplicialCellComplex {
public:
  SimplicialCellComplex() = default;

  /// Validates ids, dimensions, boundary sizes and color consistency; StructuralError on failure.
  SimplicialCellComplex(int n, std::vector<Face> faces, std::map<FaceId, int> signs = {});

  int dimension() const { return n_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::map<FaceId, int>& signs() const { return signs_; }
  bool colored() const { return colored_; }

  /// PreconditionError for an unknown id.
  std::size_t index_of(FaceId id) const;
  const Face& face(FaceId id) const { return faces_[index_of(id)]; }

  const std::vector<std::size_t>& boundary_of(std::size_t index) const { return down_[index]; }
  const std::vector<std::size_t>& cofaces_of(std::size_t index) const { return up_[index]; }

  /// Faces strictly containing the face at `index`.
  std::vector<std::size_t> strict_upper_set(std::size_t index) const;
  /// The face at `index` and every face below it.
  std::vector<std::size_t> closure(std::size_t index) const;

private:
  int n_ = 0;
  bool colored_ = false;
  std::vector<Face> faces_;
  std::map<FaceId, int> signs_;
  std::unordered_map<FaceId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
};

/// The complex of a gem: for every nonempty vertex-color set B and every component
/// of the gem restricted to the complementary colors, one face of dimension |B|-1.
SimplicialCellComplex build_complex(const Gem& gem);

std::vector<std::size_t> f_vector(const SimplicialCellComplex& cx);
std::int64_t euler_characteristic(const SimplicialCellComplex& cx);

/// The upper set of a face, regraded: a face of dimension d containing the given
/// k-face becomes a (d-k-1)-face. Face ids are kept. PreconditionError on unknown id.
SimplicialCellComplex link(const SimplicialCellComplex& cx, FaceId face);

struct PseudomanifoldReport {
  bool ok = true;
  std::string diagnostic;         ///< first violation, empty when ok
  std::vector<std::string> notes; ///< skipped checks and coloring remarks
};

/// Every face lies in a chamber and every (n-1)-face lies in exactly two chambers.
PseudomanifoldReport is_pseudomanifold(const SimplicialCellComplex& cx);

/// Number of connected components of the link of each face of dimension <= n-2
/// whose link is disconnected. Requires a pseudomanifold.
std::vector<std::pair<FaceId, std::size_t>> normality_defects(const SimplicialCellComplex& cx);

/// Links of all faces of codimension >= 2 are connected. Requires a pseudomanifold.
bool is_normal(const SimplicialCellComplex& cx);

/// Cuts the complex into chambers and reglues only across shared (n-1)-faces.
/// Requires a pseudomanifold. Output ids are 0..k-1 ordered by dimension.
SimplicialCellComplex normalize(const SimplicialCellComplex& cx);

/// Chamber adjacency of a colored, signed pseudomanifold as an unlabeled gem.
Gem chamber_gem(const SimplicialCellComplex& cx);

/// Canonical byte string of a normal colored complex. A normal colored complex is
/// determined by its chamber gem; PreconditionError if the face counts show otherwise.
std::vector<std::uint8_t> complex_canonical_form(const SimplicialCellComplex& cx);
bool is_isomorphic(const SimplicialCellComplex& a, const SimplicialCellComplex& b);

} // namespace psb
