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

#include <algorithm>
#include <map>
#include <tuple>

#include "psb/error.hpp"
#include "psb/topology.hpp"
#include "../detail/disjoint_sets.hpp"

namespace psb {

// Points of the cut-open complex are pairs (chamber, face of that chamber). Two
// such pairs are identified when they name the same face and that face lies in
// an (n-1)-face shared by both chambers; the transitive closure is the regluing.
SimplicialCellComplex normalize(const SimplicialCellComplex& cx)
{
  const auto report = is_pseudomanifold(cx);
  if (!report.ok)
    throw PreconditionError("not a pseudomanifold: " + report.diagnostic);

  const int n = cx.dimension();
  const auto& faces = cx.faces();

  std::vector<std::size_t> chambers;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == n)
      chambers.push_back(i);

  // slot_of[k] maps a face of chamber k to its slot in the union-find.
  std::vector<std::map<std::size_t, std::size_t>> slot_of(chambers.size());
  std::vector<std::pair<std::size_t, std::size_t>> slots; // (chamber ordinal, face index)
  std::vector<std::size_t> ordinal(faces.size(), 0);
  for (std::size_t k = 0; k < chambers.size(); ++k) {
    ordinal[chambers[k]] = k;
    for (auto f : cx.closure(chambers[k])) {
      slot_of[k][f] = slots.size();
      slots.emplace_back(k, f);
    }
  }

  detail::DisjointSets sets(slots.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim != n - 1)
      continue;
    const auto& up = cx.cofaces_of(i);
    const auto a = ordinal[up[0]];
    const auto b = ordinal[up[1]];
    for (auto f : cx.closure(i))
      sets.unite(slot_of[a].at(f), slot_of[b].at(f));
  }

  // Order classes by (dimension, first slot) so ids are deterministic.
  std::vector<std::size_t> roots;
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (sets.find(s) == s)
      roots.push_back(s);
  std::stable_sort(roots.begin(), roots.end(), [&](auto x, auto y) {
    return faces[slots[x].second].dim < faces[slots[y].second].dim;
  });
  std::vector<FaceId> new_id(slots.size(), -1);
  for (std::size_t r = 0; r < roots.size(); ++r)
    new_id[roots[r]] = static_cast<FaceId>(r);

  std::vector<Face> out(roots.size());
  std::map<FaceId, int> signs;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto [k, f] = slots[roots[r]];
    Face& face = out[r];
    face.id = static_cast<FaceId>(r);
    face.dim = faces[f].dim;
    face.colors = faces[f].colors;
    for (auto b : cx.boundary_of(f))
      face.boundary.push_back(new_id[sets.find(slot_of[k].at(b))]);
    if (face.dim == n) {
      auto it = cx.signs().find(faces[f].id);
      if (it != cx.signs().end())
        signs[face.id] = it->second;
    }
  }
  return SimplicialCellComplex(n, std::move(out), std::move(signs));
}

} // namespace psb
