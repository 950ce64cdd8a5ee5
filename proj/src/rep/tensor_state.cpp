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

#include <cmath>
#include <numeric>
#include <string>

#include "psb/error.hpp"
#include "psb/rep.hpp"

namespace psb {

TensorState::TensorState(std::vector<std::size_t> dims, std::vector<Complex> coefficients)
: dims_(std::move(dims))
, coeffs_(std::move(coefficients))
{
  if (dims_.size() < 2)
    throw StructuralError("a state needs at least two colors");
  std::size_t total = 1;
  for (auto d : dims_) {
    if (d == 0)
      throw StructuralError("state dimensions must be positive");
    total *= d;
  }
  if (coeffs_.size() != total)
    throw StructuralError("expected " + std::to_string(total) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  double norm2 = 0;
  for (const auto& z : coeffs_)
    norm2 += std::norm(z);
  if (!(norm2 > 0) || !std::isfinite(norm2))
    throw StructuralError("state coefficients must form a nonzero finite vector");
  const double scale = 1 / std::sqrt(norm2);
  for (auto& z : coeffs_)
    z *= scale;

  strides_.assign(dims_.size(), 1);
  for (std::size_t c = dims_.size() - 1; c-- > 0;)
    strides_[c] = strides_[c + 1] * dims_[c + 1];
}

TensorState TensorState::uniform(std::vector<std::size_t> dims)
{
  std::size_t total = 1;
  for (auto d : dims)
    total *= d;
  return TensorState(std::move(dims), std::vector<Complex>(total, Complex{1, 0}));
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b)
{
  if (a.cols != b.rows)
    throw StructuralError("cannot multiply a " + std::to_string(a.rows) + "x" +
                          std::to_string(a.cols) + " matrix by a " + std::to_string(b.rows) +
                          "x" + std::to_string(b.cols) + " matrix");
  OperatorMatrix out{a.rows, b.cols, std::vector<Complex>(a.rows * b.cols)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{})
        continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

OperatorMatrix adjoint(const OperatorMatrix& a)
{
  OperatorMatrix out{a.cols, a.rows, std::vector<Complex>(a.data.size())};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      out(j, i) = std::conj(a(i, j));
  return out;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b)
{
  if (a.rows != b.rows || a.cols != b.cols)
    throw StructuralError("matrix shapes differ");
  double worst = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  return worst;
}

} // namespace psb
