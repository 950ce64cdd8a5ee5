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

#include "psb/colored_tuple.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "psb/error.hpp"

namespace psb {

ColoredTuple::ColoredTuple(std::vector<Permutation> perms)
: perms_(std::move(perms))
{
  if (perms_.size() < 2)
    throw StructuralError("a colored tuple needs at least two colors, got " +
                          std::to_string(perms_.size()));
}

ColoredTuple ColoredTuple::identity(std::size_t colors)
{
  return ColoredTuple(std::vector<Permutation>(colors));
}

ColoredTuple ColoredTuple::diagonal(const Permutation& k, std::size_t colors)
{
  return ColoredTuple(std::vector<Permutation>(colors, k));
}

Point ColoredTuple::degree() const
{
  Point d = 0;
  for (const auto& p : perms_)
    d = std::max(d, p.degree());
  return d;
}

ColoredTuple multiply(const ColoredTuple& g, const ColoredTuple& h)
{
  if (g.colors() != h.colors())
    throw StructuralError("color count mismatch: " + std::to_string(g.colors()) + " vs " +
                          std::to_string(h.colors()));
  std::vector<Permutation> out;
  out.reserve(g.colors());
  for (std::size_t c = 0; c < g.colors(); ++c)
    out.push_back(compose(h[c], g[c]));
  return ColoredTuple(std::move(out));
}

ColoredTuple interleave(const ColoredTuple& g, const ColoredTuple& h, Point beta, Point j)
{
  const auto t = ColoredTuple::diagonal(theta(beta, j), g.colors());
  return multiply(multiply(g, t), h);
}

ColoredTuple dc_product(const ColoredTuple& g, const ColoredTuple& h, Point alpha, Point beta,
                        Point gamma, Point min_size)
{
  if (g.colors() != h.colors())
    throw StructuralError("color count mismatch: " + std::to_string(g.colors()) + " vs " +
                          std::to_string(h.colors()));
  const Point size = std::max({g.degree(), h.degree(), alpha, beta, gamma, min_size});
  return interleave(g, h, beta, size - beta);
}

ColoredTuple dc_involution(const ColoredTuple& g)
{
  std::vector<Permutation> out;
  out.reserve(g.colors());
  for (const auto& p : g.perms())
    out.push_back(inverse(p));
  return ColoredTuple(std::move(out));
}

ColoredTuple random_tuple(Point size, std::size_t colors, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  out.reserve(colors);
  std::vector<Point> images(size);
  for (std::size_t c = 0; c < colors; ++c) {
    std::iota(images.begin(), images.end(), Point{1});
    std::shuffle(images.begin(), images.end(), rng);
    out.push_back(Permutation::from_images(images));
  }
  return ColoredTuple(std::move(out));
}

ColoredTuple parse_tuple(std::string_view text)
{
  std::vector<Permutation> perms;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const auto piece = text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
    try {
      perms.push_back(parse_permutation(piece));
    } catch (const ParseError& e) {
      throw ParseError("color " + std::to_string(perms.size()) + ": " + e.what());
    }
    if (semi == std::string_view::npos)
      break;
    start = semi + 1;
  }
  if (perms.size() < 2)
    throw ParseError("a tuple needs at least two ';'-separated colors");
  return ColoredTuple(std::move(perms));
}

std::string format_tuple(const ColoredTuple& g)
{
  std::string out;
  for (std::size_t c = 0; c < g.colors(); ++c) {
    if (c > 0)
      out += "; ";
    out += format_permutation(g[c]);
  }
  return out;
}

} // namespace psb
