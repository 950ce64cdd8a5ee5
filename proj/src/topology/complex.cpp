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

#include "psb/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "psb/error.hpp"
#include "psb/pseudobordism.hpp"
#include "../detail/disjoint_sets.hpp"

namespace psb {

SimplicialCellComplex::SimplicialCellComplex(int n, std::vector<Face> faces,
                                             std::map<FaceId, int> signs)
: n_(n)
, faces_(std::move(faces))
, signs_(std::move(signs))
{
  if (n_ < -1)
    throw StructuralError("dimension must be at least -1");

  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (!index_.emplace(faces_[i].id, i).second)
      throw StructuralError("duplicate face id " + std::to_string(faces_[i].id));
  }

  colored_ = !faces_.empty() && !faces_.front().colors.empty();
  down_.resize(faces_.size());
  up_.resize(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto& f = faces_[i];
    const auto where = "face " + std::to_string(f.id) + ": ";
    if (f.dim < 0 || f.dim > n_)
      throw StructuralError(where + "dimension " + std::to_string(f.dim) + " outside 0.." +
                            std::to_string(n_));
    const std::size_t expected = f.dim == 0 ? 0 : static_cast<std::size_t>(f.dim) + 1;
    if (f.boundary.size() != expected)
      throw StructuralError(where + "a " + std::to_string(f.dim) + "-face needs " +
                            std::to_string(expected) + " boundary faces, got " +
                            std::to_string(f.boundary.size()));
    if (f.colors.empty() == colored_)
      throw StructuralError(where + "either every face or no face must carry colors");
    if (colored_) {
      std::sort(f.colors.begin(), f.colors.end());
      if (f.colors.size() != static_cast<std::size_t>(f.dim) + 1 ||
          std::adjacent_find(f.colors.begin(), f.colors.end()) != f.colors.end())
        throw StructuralError(where + "needs " + std::to_string(f.dim + 1) +
                              " pairwise distinct vertex colors");
    }
    for (FaceId b : f.boundary) {
      auto it = index_.find(b);
      if (it == index_.end())
        throw StructuralError(where + "unknown boundary face " + std::to_string(b));
      if (faces_[it->second].dim != f.dim - 1)
        throw StructuralError(where + "boundary face " + std::to_string(b) +
                              " has the wrong dimension");
      down_[i].push_back(it->second);
    }
    std::vector<std::size_t> sorted = down_[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw StructuralError(where + "repeated boundary face");
    if (colored_) {
      std::set<int> missing;
      for (auto j : down_[i]) {
        const auto& bc = faces_[j].colors;
        if (!std::includes(f.colors.begin(), f.colors.end(), bc.begin(), bc.end()))
          throw StructuralError(where + "boundary face " + std::to_string(faces_[j].id) +
                                " has colors outside the face");
        for (int c : f.colors)
          if (!std::binary_search(bc.begin(), bc.end(), c))
            missing.insert(c);
      }
      if (missing.size() != down_[i].size())
        throw StructuralError(where + "boundary faces do not omit distinct colors");
    }
  }
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (auto j : down_[i])
      up_[j].push_back(i);

  for (const auto& [id, sign] : signs_) {
    auto it = index_.find(id);
    if (it == index_.end() || faces_[it->second].dim != n_)
      throw StructuralError("sign attached to " + std::to_string(id) + ", which is not a chamber");
    if (sign != 1 && sign != -1)
      throw StructuralError("chamber signs must be +1 or -1");
  }
}

std::size_t SimplicialCellComplex::index_of(FaceId id) const
{
  auto it = index_.find(id);
  if (it == index_.end())
    throw PreconditionError("unknown face id " + std::to_string(id));
  return it->second;
}

std::vector<std::size_t> SimplicialCellComplex::strict_upper_set(std::size_t index) const
{
  std::vector<bool> seen(faces_.size(), false);
  std::vector<std::size_t> stack = up_[index], out;
  while (!stack.empty()) {
    const auto f = stack.back();
    stack.pop_back();
    if (seen[f])
      continue;
    seen[f] = true;
    out.push_back(f);
    stack.insert(stack.end(), up_[f].begin(), up_[f].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SimplicialCellComplex::closure(std::size_t index) const
{
  std::vector<bool> seen(faces_.size(), false);
  std::vector<std::size_t> stack{index}, out;
  while (!stack.empty()) {
    const auto f = stack.back();
    stack.pop_back();
    if (seen[f])
      continue;
    seen[f] = true;
    out.push_back(f);
    stack.insert(stack.end(), down_[f].begin(), down_[f].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialCellComplex build_complex(const Gem& gem)
{
  const auto colors = gem.colors();
  const unsigned full = (1u << colors) - 1;
  const auto chambers = gem.chamber_count();

  // face_of[mask][flat chamber] = id of the face with vertex colors `mask` in that chamber.
  std::vector<std::vector<FaceId>> face_of(full + 1, std::vector<FaceId>(chambers, -1));
  std::vector<unsigned> masks;
  for (unsigned m = 1; m <= full; ++m)
    masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<Face> faces;
  std::map<FaceId, int> signs;
  for (unsigned mask : masks) {
    std::vector<std::size_t> complement;
    std::vector<int> vertex_colors;
    for (std::size_t c = 0; c < colors; ++c) {
      if (mask & (1u << c))
        vertex_colors.push_back(static_cast<int>(c));
      else
        complement.push_back(c);
    }
    const int dim = static_cast<int>(vertex_colors.size()) - 1;
    for (const auto& comp : components(gem, complement)) {
      Face f;
      f.id = static_cast<FaceId>(faces.size());
      f.dim = dim;
      f.colors = vertex_colors;
      for (const auto& ch : comp)
        face_of[mask][gem.flat(ch)] = f.id;
      if (dim >= 1) {
        const auto rep = gem.flat(comp.front());
        for (int c : vertex_colors)
          f.boundary.push_back(face_of[mask & ~(1u << c)][rep]);
      }
      if (mask == full)
        signs[f.id] = comp.front().sign == Sign::plus ? 1 : -1;
      faces.push_back(std::move(f));
    }
  }
  return SimplicialCellComplex(static_cast<int>(gem.dimension()), std::move(faces), std::move(signs));
}

std::vector<std::size_t> f_vector(const SimplicialCellComplex& cx)
{
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(cx.dimension() + 1, 0)), 0);
  for (const auto& f : cx.faces())
    ++counts[static_cast<std::size_t>(f.dim)];
  return counts;
}

std::int64_t euler_characteristic(const SimplicialCellComplex& cx)
{
  std::int64_t chi = 0;
  const auto counts = f_vector(cx);
  for (std::size_t d = 0; d < counts.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[d]);
  return chi;
}

SimplicialCellComplex link(const SimplicialCellComplex& cx, FaceId face)
{
  const auto g = cx.index_of(face);
  const auto& base = cx.faces()[g];
  const auto upper = cx.strict_upper_set(g);
  std::vector<bool> in_upper(cx.faces().size(), false);
  for (auto i : upper)
    in_upper[i] = true;

  std::vector<Face> faces;
  for (auto i : upper) {
    const auto& src = cx.faces()[i];
    Face f;
    f.id = src.id;
    f.dim = src.dim - base.dim - 1;
    for (int c : src.colors)
      if (!std::binary_search(base.colors.begin(), base.colors.end(), c))
        f.colors.push_back(c);
    for (auto j : cx.boundary_of(i))
      if (in_upper[j])
        f.boundary.push_back(cx.faces()[j].id);
    faces.push_back(std::move(f));
  }
  return SimplicialCellComplex(cx.dimension() - base.dim - 1, std::move(faces));
}

PseudomanifoldReport is_pseudomanifold(const SimplicialCellComplex& cx)
{
  PseudomanifoldReport report;
  const int n = cx.dimension();
  const auto& faces = cx.faces();
  for (std::size_t i = 0; i < faces.size() && report.ok; ++i) {
    if (faces[i].dim == n)
      continue;
    const auto upper = cx.strict_upper_set(i);
    if (std::none_of(upper.begin(), upper.end(), [&](auto j) { return faces[j].dim == n; })) {
      report.ok = false;
      report.diagnostic = "face " + std::to_string(faces[i].id) + " (dim " +
                          std::to_string(faces[i].dim) + ") lies in no chamber";
    }
  }
  for (std::size_t i = 0; i < faces.size() && report.ok; ++i) {
    if (faces[i].dim != n - 1)
      continue;
    const auto chambers = cx.cofaces_of(i).size();
    if (chambers != 2) {
      report.ok = false;
      report.diagnostic = "(n-1)-face " + std::to_string(faces[i].id) + " lies in " +
                          std::to_string(chambers) + " chamber(s), expected 2";
    }
  }

  if (!cx.colored()) {
    report.notes.push_back("uncolored complex: coloring checks skipped");
  } else if (report.ok) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].dim != n - 1 || cx.signs().empty())
        continue;
      const auto& up = cx.cofaces_of(i);
      auto sign = [&](std::size_t j) {
        auto it = cx.signs().find(faces[j].id);
        return it == cx.signs().end() ? 0 : it->second;
      };
      if (sign(up[0]) == 0 || sign(up[0]) == sign(up[1])) {
        report.notes.push_back("chamber signs do not alternate across face " +
                               std::to_string(faces[i].id));
        break;
      }
    }
  }
  return report;
}

std::vector<std::pair<FaceId, std::size_t>> normality_defects(const SimplicialCellComplex& cx)
{
  const auto report = is_pseudomanifold(cx);
  if (!report.ok)
    throw PreconditionError("not a pseudomanifold: " + report.diagnostic);

  std::vector<std::pair<FaceId, std::size_t>> defects;
  const auto& faces = cx.faces();
  std::vector<std::size_t> slot(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim > cx.dimension() - 2)
      continue;
    // The link is connected iff the strict upper set is connected under incidence.
    const auto upper = cx.strict_upper_set(i);
    std::vector<bool> in_upper(faces.size(), false);
    for (std::size_t k = 0; k < upper.size(); ++k) {
      in_upper[upper[k]] = true;
      slot[upper[k]] = k;
    }
    detail::DisjointSets sets(upper.size());
    for (std::size_t k = 0; k < upper.size(); ++k)
      for (auto j : cx.boundary_of(upper[k]))
        if (in_upper[j])
          sets.unite(k, slot[j]);
    std::size_t roots = 0;
    for (std::size_t k = 0; k < upper.size(); ++k)
      roots += sets.find(k) == k ? 1 : 0;
    if (roots > 1)
      defects.emplace_back(faces[i].id, roots);
  }
  return defects;
}

bool is_normal(const SimplicialCellComplex& cx)
{
  return normality_defects(cx).empty();
}

Gem chamber_gem(const SimplicialCellComplex& cx)
{
  if (!cx.colored())
    throw PreconditionError("chamber gem needs a colored complex");
  const auto report = is_pseudomanifold(cx);
  if (!report.ok)
    throw PreconditionError("not a pseudomanifold: " + report.diagnostic);
  const int n = cx.dimension();
  if (n < 1)
    throw PreconditionError("chamber gem needs dimension >= 1");

  const auto& faces = cx.faces();
  std::vector<std::size_t> plus, minus;
  std::vector<std::uint32_t> position(faces.size(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim != n)
      continue;
    auto it = cx.signs().find(faces[i].id);
    if (it == cx.signs().end())
      throw PreconditionError("chamber " + std::to_string(faces[i].id) + " has no sign");
    for (int c = 0; c <= n; ++c)
      if (faces[i].colors[static_cast<std::size_t>(c)] != c)
        throw PreconditionError("chamber " + std::to_string(faces[i].id) +
                                " must carry the vertex colors 0.." + std::to_string(n));
    auto& side = it->second > 0 ? plus : minus;
    position[i] = static_cast<std::uint32_t>(side.size());
    side.push_back(i);
  }
  if (plus.size() != minus.size())
    throw PreconditionError("unequal numbers of plus- and minus-chambers");

  const auto colors = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<std::uint32_t>> matchings(colors, std::vector<std::uint32_t>(plus.size()));
  for (std::size_t p = 0; p < plus.size(); ++p) {
    for (auto f : cx.boundary_of(plus[p])) {
      const auto& fc = faces[f].colors;
      int color = 0;
      while (color < n && fc[static_cast<std::size_t>(color)] == color)
        ++color;
      const auto& up = cx.cofaces_of(f);
      const auto other = up[0] == plus[p] ? up[1] : up[0];
      auto it = cx.signs().find(faces[other].id);
      if (it->second > 0)
        throw PreconditionError("chambers " + std::to_string(faces[plus[p]].id) + " and " +
                                std::to_string(faces[other].id) + " are adjacent and both plus");
      matchings[static_cast<std::size_t>(color)][p] = position[other];
    }
  }
  return Gem(static_cast<unsigned>(n), std::move(matchings), std::vector<Label>(plus.size()),
             std::vector<Label>(plus.size()));
}

std::vector<std::uint8_t> complex_canonical_form(const SimplicialCellComplex& cx)
{
  const Gem gem = chamber_gem(cx);
  if (f_vector(build_complex(gem)) != f_vector(cx))
    throw PreconditionError("complex is not determined by its chamber graph (not normal)");
  auto out = canonical_code(chamber_graph(gem));
  out.insert(out.begin(), static_cast<std::uint8_t>(cx.dimension()));
  return out;
}

bool is_isomorphic(const SimplicialCellComplex& a, const SimplicialCellComplex& b)
{
  return complex_canonical_form(a) == complex_canonical_form(b);
}

} // namespace psb
