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
#include <numeric>
#include <string>
#include <tuple>

#include <Eigen/Core>

#include "psb/error.hpp"
#include "psb/rep.hpp"

namespace psb {

namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
  if (a != 0 && b > UINT64_MAX / a)
    return UINT64_MAX;
  return a * b;
}

std::uint64_t size_of(const std::vector<std::size_t>& legs, const std::vector<std::size_t>& dims)
{
  std::uint64_t s = 1;
  for (auto e : legs)
    s = saturating_mul(s, dims[e]);
  return s;
}

bool contains(const std::vector<std::size_t>& legs, std::size_t e)
{
  return std::find(legs.begin(), legs.end(), e) != legs.end();
}

// Legs of the pairwise result: unshared legs of a, then unshared legs of b.
std::vector<std::size_t> result_legs(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
  std::vector<std::size_t> out;
  for (auto e : a)
    if (!contains(b, e))
      out.push_back(e);
  for (auto e : b)
    if (!contains(a, e))
      out.push_back(e);
  return out;
}

// Reorders the legs of t to `order`, a permutation of t.legs.
std::vector<Complex> transpose(const Tensor& t, const std::vector<std::size_t>& order,
                               const std::vector<std::size_t>& dims)
{
  if (order == t.legs)
    return t.data;
  const std::size_t rank = t.legs.size();
  std::vector<std::size_t> stride(rank, 1);
  for (std::size_t k = rank; k-- > 1;)
    stride[k - 1] = stride[k] * dims[t.legs[k]];
  std::vector<std::size_t> src_stride(rank), extent(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const auto pos = static_cast<std::size_t>(
        std::find(t.legs.begin(), t.legs.end(), order[k]) - t.legs.begin());
    src_stride[k] = stride[pos];
    extent[k] = dims[order[k]];
  }
  std::vector<Complex> out(t.data.size());
  std::vector<std::size_t> counter(rank, 0);
  std::size_t src = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = t.data[src];
    for (std::size_t k = rank; k-- > 0;) {
      if (++counter[k] < extent[k]) {
        src += src_stride[k];
        break;
      }
      src -= src_stride[k] * (extent[k] - 1);
      counter[k] = 0;
    }
  }
  return out;
}

Tensor contract_pair(const Tensor& a, const Tensor& b, const std::vector<std::size_t>& dims,
                     std::uint64_t cap)
{
  std::vector<std::size_t> keep_a, shared, keep_b;
  for (auto e : a.legs)
    (contains(b.legs, e) ? shared : keep_a).push_back(e);
  for (auto e : b.legs)
    if (!contains(a.legs, e))
      keep_b.push_back(e);

  Tensor out;
  out.legs = keep_a;
  out.legs.insert(out.legs.end(), keep_b.begin(), keep_b.end());
  const auto size = size_of(out.legs, dims);
  if (size > cap)
    throw CapExceeded("intermediate tensor with " + std::to_string(size) +
                      " entries exceeds the cap of " + std::to_string(cap));

  auto order_a = keep_a;
  order_a.insert(order_a.end(), shared.begin(), shared.end());
  auto order_b = shared;
  order_b.insert(order_b.end(), keep_b.begin(), keep_b.end());
  auto da = transpose(a, order_a, dims);
  auto db = transpose(b, order_b, dims);

  const auto m = static_cast<Eigen::Index>(size_of(keep_a, dims));
  const auto k = static_cast<Eigen::Index>(size_of(shared, dims));
  const auto n = static_cast<Eigen::Index>(size_of(keep_b, dims));
  out.data.resize(static_cast<std::size_t>(m * n));
  Eigen::Map<RowMajor> c(out.data.data(), m, n);
  c.noalias() = Eigen::Map<const RowMajor>(da.data(), m, k) * Eigen::Map<const RowMajor>(db.data(), k, n);
  return out;
}

} // namespace

TensorNetwork gem_network(const Gem& gem, const TensorState& xi, const std::vector<bool>& skip)
{
  if (xi.colors() != gem.colors())
    throw StructuralError("state has " + std::to_string(xi.colors()) + " colors, gem has " +
                          std::to_string(gem.colors()));
  const std::size_t size = gem.size();
  TensorNetwork net;
  for (std::size_t c = 0; c < gem.colors(); ++c)
    net.edge_dims.insert(net.edge_dims.end(), size, xi.dims()[c]);

  std::vector<Complex> conj_x(xi.coefficients());
  for (auto& z : conj_x)
    z = std::conj(z);
  for (std::size_t v = 0; v < gem.chamber_count(); ++v) {
    if (!skip.empty() && skip[v])
      continue;
    const auto ch = gem.unflat(v);
    Tensor t;
    for (std::size_t c = 0; c < gem.colors(); ++c) {
      const auto p = ch.sign == Sign::plus ? ch.index : gem.match_inverse(c, ch.index);
      t.legs.push_back(c * size + p);
    }
    t.data = ch.sign == Sign::plus ? xi.coefficients() : conj_x;
    net.tensors.push_back(std::move(t));
  }
  return net;
}

std::vector<ContractionStep> greedy_order(const TensorNetwork& net)
{
  std::map<std::size_t, std::vector<std::size_t>> alive;
  for (std::size_t i = 0; i < net.tensors.size(); ++i)
    alive.emplace(i, net.tensors[i].legs);
  std::size_t next = net.tensors.size();

  // Tensors holding each edge; every edge has at most two holders.
  std::map<std::size_t, std::vector<std::size_t>> holders;
  for (const auto& [id, legs] : alive)
    for (auto e : legs)
      holders[e].push_back(id);

  std::vector<ContractionStep> order;
  for (;;) {
    std::tuple<std::uint64_t, std::size_t, std::size_t> best{UINT64_MAX, 0, 0};
    bool found = false;
    for (const auto& [e, ids] : holders) {
      if (ids.size() != 2)
        continue;
      const auto i = std::min(ids[0], ids[1]);
      const auto j = std::max(ids[0], ids[1]);
      const std::tuple<std::uint64_t, std::size_t, std::size_t> cand{
          size_of(result_legs(alive[i], alive[j]), net.edge_dims), i, j};
      if (!found || cand < best) {
        best = cand;
        found = true;
      }
    }
    if (!found)
      break;
    const auto [size, i, j] = best;
    (void)size;
    auto legs = result_legs(alive[i], alive[j]);
    for (auto e : alive[i])
      std::erase(holders[e], i);
    for (auto e : alive[j])
      std::erase(holders[e], j);
    for (auto e : legs)
      holders[e].push_back(next);
    for (auto e : alive[i])
      if (holders[e].empty())
        holders.erase(e);
    for (auto e : alive[j])
      if (holders.count(e) && holders[e].empty())
        holders.erase(e);
    alive.erase(i);
    alive.erase(j);
    alive.emplace(next++, std::move(legs));
    order.emplace_back(i, j);
  }

  // Disconnected pieces, smallest first.
  while (alive.size() > 1) {
    std::vector<std::pair<std::uint64_t, std::size_t>> pieces;
    for (const auto& [id, legs] : alive)
      pieces.emplace_back(size_of(legs, net.edge_dims), id);
    std::sort(pieces.begin(), pieces.end());
    const auto i = std::min(pieces[0].second, pieces[1].second);
    const auto j = std::max(pieces[0].second, pieces[1].second);
    auto legs = result_legs(alive[i], alive[j]);
    alive.erase(i);
    alive.erase(j);
    alive.emplace(next++, std::move(legs));
    order.emplace_back(i, j);
  }
  return order;
}

std::vector<ContractionStep> contraction_order(const Gem& gem, const std::vector<std::size_t>& dims)
{
  return greedy_order(gem_network(gem, TensorState::uniform(dims)));
}

Tensor contract(const TensorNetwork& net, const std::vector<ContractionStep>& order, std::uint64_t cap)
{
  std::map<std::size_t, Tensor> alive;
  for (std::size_t i = 0; i < net.tensors.size(); ++i) {
    const auto& t = net.tensors[i];
    if (t.data.size() != size_of(t.legs, net.edge_dims))
      throw StructuralError("tensor " + std::to_string(i) + " does not match its legs");
    alive.emplace(i, t);
  }
  std::size_t next = net.tensors.size();
  for (const auto& [i, j] : order) {
    auto a = alive.find(i);
    auto b = alive.find(j);
    if (i == j || a == alive.end() || b == alive.end())
      throw PreconditionError("contraction step (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") names a consumed or unknown tensor");
    auto t = contract_pair(a->second, b->second, net.edge_dims, cap);
    alive.erase(a);
    alive.erase(b);
    alive.emplace(next++, std::move(t));
  }
  if (alive.empty())
    return Tensor{{}, {Complex{1, 0}}};
  if (alive.size() != 1)
    throw PreconditionError("contraction order leaves " + std::to_string(alive.size()) + " tensors");
  return std::move(alive.begin()->second);
}

std::uint64_t peak_size(const TensorNetwork& net, const std::vector<ContractionStep>& order)
{
  std::map<std::size_t, std::vector<std::size_t>> alive;
  std::uint64_t peak = 0;
  for (std::size_t i = 0; i < net.tensors.size(); ++i) {
    alive.emplace(i, net.tensors[i].legs);
    peak = std::max(peak, size_of(net.tensors[i].legs, net.edge_dims));
  }
  std::size_t next = net.tensors.size();
  for (const auto& [i, j] : order) {
    auto legs = result_legs(alive.at(i), alive.at(j));
    peak = std::max(peak, size_of(legs, net.edge_dims));
    alive.erase(i);
    alive.erase(j);
    alive.emplace(next++, std::move(legs));
  }
  return peak;
}

} // namespace psb
