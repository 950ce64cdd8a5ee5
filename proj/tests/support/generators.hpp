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

// Seeded generators and independent oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "psb/colored_tuple.hpp"
#include "psb/gem.hpp"
#include "psb/permutation.hpp"
#include "psb/rep.hpp"
#include "psb/topology.hpp"

namespace psbtest {

using psb::Point;

class Rng {
public:
  explicit Rng(std::uint64_t seed)
  : engine_(seed)
  {
  }

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi)
  {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>()(engine_); }
  std::uint64_t seed() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// Uniform permutation of {first..last}, identity elsewhere.
inline psb::Permutation random_perm_on(Rng& rng, Point first, Point last)
{
  std::vector<Point> images;
  for (Point x = 1; x <= last; ++x)
    images.push_back(x);
  if (last >= first)
    std::shuffle(images.begin() + (first - 1), images.end(), rng.engine());
  return psb::Permutation::from_images(images);
}

inline psb::ColoredTuple random_tuple(Rng& rng, Point size, std::size_t colors)
{
  return psb::random_tuple(size, colors, rng.seed());
}

/// A diagonal element of K(alpha) moving points in {alpha+1..alpha+spread}.
inline psb::ColoredTuple random_k(Rng& rng, Point alpha, Point spread, std::size_t colors)
{
  return psb::ColoredTuple::diagonal(random_perm_on(rng, alpha + 1, alpha + spread), colors);
}

/// Same matchings, no labels.
inline psb::Gem strip_labels(const psb::Gem& gem)
{
  std::vector<std::vector<std::uint32_t>> m;
  for (std::size_t c = 0; c < gem.colors(); ++c)
    m.push_back(gem.matching(c));
  return psb::Gem(gem.dimension(), m, std::vector<psb::Label>(gem.size()),
                  std::vector<psb::Label>(gem.size()));
}

/// Dense complex coefficients with Gaussian entries, normalized.
inline psb::TensorState random_state(Rng& rng, const std::vector<std::size_t>& dims)
{
  std::size_t total = 1;
  for (auto d : dims)
    total *= d;
  std::vector<psb::Complex> coeffs(total);
  for (auto& z : coeffs)
    z = {rng.normal(), rng.normal()};
  return psb::TensorState(dims, coeffs);
}

/// Phi by direct enumeration of all arrangements: one basis digit of the edge's
/// color on every edge of the gem, product of x over plus chambers and conj(x)
/// over minus chambers. Shares no code with the tensor contraction.
inline psb::Complex brute_force_spherical(const psb::Gem& gem, const psb::TensorState& xi)
{
  const std::size_t colors = gem.colors();
  const std::size_t size = gem.size();
  const std::size_t edges = colors * size;
  std::vector<std::size_t> digit(edges, 0);
  psb::Complex total{};
  for (;;) {
    psb::Complex term{1, 0};
    for (std::uint32_t p = 0; p < size; ++p) {
      std::size_t v = 0;
      for (std::size_t c = 0; c < colors; ++c)
        v += digit[c * size + p] * xi.stride(c);
      term *= xi[v];
    }
    for (std::uint32_t q = 0; q < size; ++q) {
      std::size_t v = 0;
      for (std::size_t c = 0; c < colors; ++c)
        v += digit[c * size + gem.match_inverse(c, q)] * xi.stride(c);
      term *= std::conj(xi[v]);
    }
    total += term;
    std::size_t e = 0;
    for (; e < edges; ++e) {
      if (++digit[e] < xi.dims()[e / size])
        break;
      digit[e] = 0;
    }
    if (e == edges)
      break;
  }
  return total;
}

/// Identifies vertex `drop` with vertex `keep` (same color) in a face poset.
inline psb::SimplicialCellComplex pinch(const psb::SimplicialCellComplex& cx, psb::FaceId keep,
                                        psb::FaceId drop)
{
  std::vector<psb::Face> faces;
  for (const auto& f : cx.faces()) {
    if (f.id == drop)
      continue;
    psb::Face g = f;
    for (auto& b : g.boundary)
      if (b == drop)
        b = keep;
    faces.push_back(std::move(g));
  }
  return psb::SimplicialCellComplex(cx.dimension(), std::move(faces), cx.signs());
}

/// Number of connected components of the face poset restricted to `faces`,
/// joined through incidence. Plain DFS, used as an oracle for link counts.
inline std::size_t poset_components(const psb::SimplicialCellComplex& cx)
{
  std::map<psb::FaceId, std::set<psb::FaceId>> adj;
  for (const auto& f : cx.faces()) {
    adj[f.id];
    for (auto b : f.boundary) {
      adj[f.id].insert(b);
      adj[b].insert(f.id);
    }
  }
  std::set<psb::FaceId> seen;
  std::size_t count = 0;
  for (const auto& [id, _] : adj) {
    if (seen.count(id))
      continue;
    ++count;
    std::vector<psb::FaceId> stack{id};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second)
        continue;
      for (auto w : adj[v])
        stack.push_back(w);
    }
  }
  return count;
}

} // namespace psbtest
