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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "psb/colored_tuple.hpp"
#include "psb/gem.hpp"
#include "psb/pseudobordism.hpp"

namespace psb {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// The unit vector xi in V = V_0 (x) V_1 (x) ... (x) V_n.
///
/// Coefficients are stored row-major with color 0 slowest, so the basis vector
/// with color indices (i_0, ..., i_n) sits at sum_c i_c * stride(c).
class TensorState {
public:
  TensorState() = default;

  /// Rescales to unit norm. StructuralError on shape mismatch, zero dims or a zero vector.
  TensorState(std::vector<std::size_t> dims, std::vector<Complex> coefficients);

  /// All coefficients equal, then normalized.
  static TensorState uniform(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  std::size_t colors() const { return dims_.size(); }
  /// dim V.
  std::size_t total_dim() const { return coeffs_.size(); }
  std::size_t stride(std::size_t color) const { return strides_[color]; }
  /// Color-c index of basis vector v of V.
  std::size_t digit(std::size_t v, std::size_t color) const
  {
    return v / strides_[color] % dims_[color];
  }
  Complex operator[](std::size_t v) const { return coeffs_[v]; }

private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<Complex> coeffs_;
};

/// Dense complex matrix, row-major. Rows index V^(x)alpha, columns V^(x)beta,
/// with tensor position 1 the slowest digit.
struct OperatorMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  Complex& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix adjoint(const OperatorMatrix& a);
/// Largest entrywise modulus of a - b; StructuralError on shape mismatch.
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

/// Action of nu(g) on a basis multi-index of V^(x)L (one V-index per position).
/// The color-c digit at output position m is the color-c digit at input position g_c(m).
std::vector<std::size_t> nu_apply(const ColoredTuple& g, const std::vector<std::size_t>& index,
                                  const TensorState& xi);

/// rho_bar(g): V^(x)beta -> V^(x)alpha at truncation L = max(degree(g), alpha, beta).
///
/// Entry (I, J) is <nu(g)(e_J (x) xi^(L-beta)), e_I (x) xi^(L-alpha)> with the inner
/// product conjugate-linear in its first argument. CapExceeded when D^max(alpha, beta)
/// exceeds `cap`.
OperatorMatrix rho_bar(const ColoredTuple& g, Point alpha, Point beta, const TensorState& xi,
                       std::uint64_t cap = kDefaultCap);

/// Phi(g) = rho_bar(g, 0, 0) as a scalar.
Complex spherical_direct(const ColoredTuple& g, const TensorState& xi);

/// Product formula over arrangements, evaluated as a tensor network: x on every
/// plus-chamber, conj(x) on every minus-chamber, one summed index per gem edge.
/// Labels are ignored.
Complex spherical_combinatorial(const Gem& gem, const TensorState& xi,
                                std::uint64_t cap = kDefaultCap);

/// rho_bar of a morphism through the same network: labeled chambers are left out
/// and their edges become the row (plus labels) and column (minus labels) indices.
OperatorMatrix rho_bar(const Pseudobordism& sigma, const TensorState& xi,
                       std::uint64_t cap = kDefaultCap);

// Tensor networks ---------------------------------------------------------

/// Dense tensor whose legs are edge ids; row-major, first leg slowest.
struct Tensor {
  std::vector<std::size_t> legs;
  std::vector<Complex> data;
};

struct TensorNetwork {
  std::vector<std::size_t> edge_dims;
  std::vector<Tensor> tensors;
};

/// Pairwise step: contract tensors `first` and `second`; the result gets the next free id.
using ContractionStep = std::pair<std::size_t, std::size_t>;

/// The network of a gem: tensor k is chamber k in flat order, edge c*L + p joins
/// plus-chamber p to its color-c neighbor. Chambers for which `skip` is true get no
/// tensor (skip may be empty).
TensorNetwork gem_network(const Gem& gem, const TensorState& xi,
                          const std::vector<bool>& skip = {});

/// Greedy order: repeatedly contract the pair sharing an edge whose result is
/// smallest (ties: smallest ids), then join the remaining pieces by outer products.
std::vector<ContractionStep> greedy_order(const TensorNetwork& net);

/// greedy_order of gem_network(gem, uniform state of `dims`).
std::vector<ContractionStep> contraction_order(const Gem& gem, const std::vector<std::size_t>& dims);

/// Runs `order`, which must reduce the network to one tensor. Shared edges are summed.
/// CapExceeded if an intermediate has more than `cap` entries. An empty network gives
/// the scalar 1.
Tensor contract(const TensorNetwork& net, const std::vector<ContractionStep>& order,
                std::uint64_t cap = kDefaultCap);

/// Size of the largest tensor produced by `order`.
std::uint64_t peak_size(const TensorNetwork& net, const std::vector<ContractionStep>& order);

} // namespace psb
