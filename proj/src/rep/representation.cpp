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
#include <string>

#include "psb/error.hpp"
#include "psb/rep.hpp"

namespace psb {

namespace {

// Configurations enumerated by the direct formula; far above anything desk-scale.
constexpr std::uint64_t kEnumerationLimit = 4'000'000'000ULL;

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp)
{
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base)
      return UINT64_MAX;
    out *= base;
  }
  return out;
}

void require_colors(const ColoredTuple& g, const TensorState& xi)
{
  if (g.colors() != xi.colors())
    throw StructuralError("tuple has " + std::to_string(g.colors()) + " colors, state has " +
                          std::to_string(xi.colors()));
}

} // namespace

std::vector<std::size_t> nu_apply(const ColoredTuple& g, const std::vector<std::size_t>& index,
                                  const TensorState& xi)
{
  require_colors(g, xi);
  if (index.size() < g.degree())
    throw PreconditionError("multi-index of length " + std::to_string(index.size()) +
                            " is shorter than the degree " + std::to_string(g.degree()));
  for (auto v : index)
    if (v >= xi.total_dim())
      throw PreconditionError("basis index " + std::to_string(v) + " out of range");
  std::vector<std::size_t> out(index.size(), 0);
  for (std::size_t m = 0; m < index.size(); ++m)
    for (std::size_t c = 0; c < g.colors(); ++c) {
      const auto src = g[c](static_cast<Point>(m + 1)) - 1;
      out[m] += xi.digit(index[src], c) * xi.stride(c);
    }
  return out;
}

OperatorMatrix rho_bar(const ColoredTuple& g, Point alpha, Point beta, const TensorState& xi,
                       std::uint64_t cap)
{
  require_colors(g, xi);
  const std::size_t D = xi.total_dim();
  const std::size_t L = std::max({g.degree(), alpha, beta});
  const auto side = checked_power(D, std::max(alpha, beta));
  if (side > cap)
    throw CapExceeded("D^max(alpha, beta) = " + std::to_string(side) + " exceeds the cap of " +
                      std::to_string(cap));
  const auto configs = checked_power(D, L);
  if (configs > kEnumerationLimit)
    throw CapExceeded("direct evaluation would enumerate " + std::to_string(configs) +
                      " configurations");

  const std::size_t colors = g.colors();
  OperatorMatrix out;
  out.rows = static_cast<std::size_t>(checked_power(D, alpha));
  out.cols = static_cast<std::size_t>(checked_power(D, beta));
  out.data.assign(out.rows * out.cols, Complex{});

  // source[m * colors + c] = g_c(m), 0-based.
  std::vector<std::size_t> source(L * colors);
  for (std::size_t m = 0; m < L; ++m)
    for (std::size_t c = 0; c < colors; ++c)
      source[m * colors + c] = g[c](static_cast<Point>(m + 1)) - 1;
  // part[v * colors + c] = contribution of v's color-c digit to a basis index.
  std::vector<std::size_t> part(D * colors);
  for (std::size_t v = 0; v < D; ++v)
    for (std::size_t c = 0; c < colors; ++c)
      part[v * colors + c] = xi.digit(v, c) * xi.stride(c);
  std::vector<Complex> conj_x(D);
  for (std::size_t v = 0; v < D; ++v)
    conj_x[v] = std::conj(xi[v]);

  // Odometer over input configurations, position L-1 fastest.
  std::vector<std::size_t> in(L, 0);
  for (std::uint64_t step = 0; step < configs; ++step) {
    Complex weight{1, 0};
    for (std::size_t p = beta; p < L && weight != Complex{}; ++p)
      weight *= conj_x[in[p]];
    if (weight != Complex{}) {
      std::size_t row = 0;
      for (std::size_t m = 0; m < L; ++m) {
        std::size_t v = 0;
        for (std::size_t c = 0; c < colors; ++c)
          v += part[in[source[m * colors + c]] * colors + c];
        if (m < alpha)
          row = row * D + v;
        else
          weight *= xi[v];
      }
      std::size_t col = 0;
      for (std::size_t p = 0; p < beta; ++p)
        col = col * D + in[p];
      out(row, col) += weight;
    }
    for (std::size_t k = L; k-- > 0;) {
      if (++in[k] < D)
        break;
      in[k] = 0;
    }
  }
  return out;
}

Complex spherical_direct(const ColoredTuple& g, const TensorState& xi)
{
  return rho_bar(g, 0, 0, xi, 1)(0, 0);
}

Complex spherical_combinatorial(const Gem& gem, const TensorState& xi, std::uint64_t cap)
{
  const auto net = gem_network(gem, xi);
  const auto t = contract(net, greedy_order(net), cap);
  return t.data.at(0);
}

OperatorMatrix rho_bar(const Pseudobordism& sigma, const TensorState& xi, std::uint64_t cap)
{
  const Gem& gem = sigma.gem();
  const std::size_t D = xi.total_dim();
  const Point alpha = sigma.target();
  const Point beta = sigma.source();
  const auto side = checked_power(D, std::max(alpha, beta));
  if (side > cap)
    throw CapExceeded("D^max(alpha, beta) = " + std::to_string(side) + " exceeds the cap of " +
                      std::to_string(cap));

  std::vector<bool> skip(gem.chamber_count(), false);
  for (std::size_t v = 0; v < skip.size(); ++v)
    skip[v] = gem.label(gem.unflat(v)) != kNoLabel;
  const auto net = gem_network(gem, xi, skip);
  const auto t = contract(net, greedy_order(net), cap);

  const std::size_t colors = gem.colors();
  const std::size_t size = gem.size();
  // Edges fixed by row digit s (plus label s+1) and column digit s (minus label s+1).
  std::vector<std::size_t> row_edges(alpha * colors), col_edges(beta * colors);
  for (std::uint32_t p = 0; p < size; ++p)
    if (Label l = gem.plus_labels()[p]; l != kNoLabel)
      for (std::size_t c = 0; c < colors; ++c)
        row_edges[(l - 1) * colors + c] = c * size + p;
  for (std::uint32_t q = 0; q < size; ++q)
    if (Label l = gem.minus_labels()[q]; l != kNoLabel)
      for (std::size_t c = 0; c < colors; ++c)
        col_edges[(l - 1) * colors + c] = c * size + gem.match_inverse(c, q);

  std::vector<std::size_t> leg_stride(net.edge_dims.size(), 0);
  {
    std::size_t s = 1;
    for (std::size_t k = t.legs.size(); k-- > 0;) {
      leg_stride[t.legs[k]] = s;
      s *= net.edge_dims[t.legs[k]];
    }
  }

  OperatorMatrix out;
  out.rows = static_cast<std::size_t>(checked_power(D, alpha));
  out.cols = static_cast<std::size_t>(checked_power(D, beta));
  out.data.assign(out.rows * out.cols, Complex{});

  constexpr std::size_t kUnset = SIZE_MAX;
  std::vector<std::size_t> value(net.edge_dims.size(), kUnset);
  auto digits = [&](std::size_t index, Point count, std::vector<std::size_t>& v) {
    v.assign(count, 0);
    for (std::size_t s = count; s-- > 0;) {
      v[s] = index % D;
      index /= D;
    }
  };
  std::vector<std::size_t> I, J;
  for (std::size_t row = 0; row < out.rows; ++row) {
    digits(row, alpha, I);
    std::fill(value.begin(), value.end(), kUnset);
    for (std::size_t s = 0; s < alpha; ++s)
      for (std::size_t c = 0; c < colors; ++c)
        value[row_edges[s * colors + c]] = xi.digit(I[s], c);
    for (std::size_t col = 0; col < out.cols; ++col) {
      digits(col, beta, J);
      auto v = value;
      bool consistent = true;
      for (std::size_t s = 0; s < beta && consistent; ++s)
        for (std::size_t c = 0; c < colors; ++c) {
          const auto e = col_edges[s * colors + c];
          const auto d = xi.digit(J[s], c);
          if (v[e] != kUnset && v[e] != d) {
            consistent = false;
            break;
          }
          v[e] = d;
        }
      if (!consistent)
        continue;
      std::size_t offset = 0;
      for (auto e : t.legs)
        offset += v[e] * leg_stride[e];
      out(row, col) = t.data[offset];
    }
  }
  return out;
}

} // namespace psb
