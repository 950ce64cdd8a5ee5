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
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "psb/error.hpp"
#include "psb/io.hpp"

namespace psb {

using nlohmann::json;

namespace {

json parse(std::string_view text)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Runs a reader, turning nlohmann type and key errors into ParseError.
template <class F>
auto reading(const char* what, F&& f)
{
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

json labels_to_json(const std::vector<Label>& labels)
{
  json out = json::object();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != kNoLabel)
      out[std::to_string(labels[i])] = i + 1;
  return out;
}

std::vector<Label> labels_from_json(const json& j, std::uint32_t size)
{
  std::vector<Label> out(size, kNoLabel);
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    unsigned long label = 0;
    try {
      label = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || label == 0)
      throw ParseError("label key \"" + key + "\" is not a positive integer");
    const auto chamber = value.get<std::uint32_t>();
    if (chamber < 1 || chamber > size)
      throw StructuralError("label " + key + " points at chamber " + std::to_string(chamber) +
                            " outside 1.." + std::to_string(size));
    if (out[chamber - 1] != kNoLabel)
      throw StructuralError("chamber " + std::to_string(chamber) + " carries two labels");
    out[chamber - 1] = static_cast<Label>(label);
  }
  return out;
}

json gem_json(const Gem& gem)
{
  json m = json::array();
  for (std::size_t c = 0; c < gem.colors(); ++c) {
    json row = json::array();
    for (auto q : gem.matching(c))
      row.push_back(q + 1);
    m.push_back(std::move(row));
  }
  return json{{"n", gem.dimension()},
              {"L", gem.size()},
              {"matchings", std::move(m)},
              {"plus_labels", labels_to_json(gem.plus_labels())},
              {"minus_labels", labels_to_json(gem.minus_labels())}};
}

Gem gem_of(const json& j)
{
  const auto n = j.at("n").get<unsigned>();
  const auto size = j.at("L").get<std::uint32_t>();
  std::vector<std::vector<std::uint32_t>> matchings;
  for (const auto& row : j.at("matchings")) {
    std::vector<std::uint32_t> m;
    for (const auto& q : row) {
      const auto t = q.get<std::uint32_t>();
      if (t < 1 || t > size)
        throw StructuralError("matching target " + std::to_string(t) + " outside 1.." +
                              std::to_string(size));
      m.push_back(t - 1);
    }
    if (m.size() != size)
      throw StructuralError("matching of length " + std::to_string(m.size()) + ", expected L = " +
                            std::to_string(size));
    matchings.push_back(std::move(m));
  }
  auto plus = labels_from_json(j.value("plus_labels", json::object()), size);
  auto minus = labels_from_json(j.value("minus_labels", json::object()), size);
  return Gem(n, std::move(matchings), std::move(plus), std::move(minus));
}

std::vector<std::vector<double>> split(const OperatorMatrix& m, bool imag)
{
  std::vector<std::vector<double>> out(m.rows, std::vector<double>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t k = 0; k < m.cols; ++k)
      out[i][k] = imag ? m(i, k).imag() : m(i, k).real();
  return out;
}

} // namespace

std::string gem_to_json(const Gem& gem)
{
  return gem_json(gem).dump();
}

Gem gem_from_json(std::string_view text)
{
  const auto j = parse(text);
  return reading("gem", [&] { return gem_of(j); });
}

std::string bordism_to_json(const Pseudobordism& sigma)
{
  auto j = gem_json(sigma.gem());
  j["source"] = sigma.source();
  j["target"] = sigma.target();
  return j.dump();
}

Pseudobordism bordism_from_json(std::string_view text)
{
  const auto j = parse(text);
  return reading("morphism", [&] {
    return Pseudobordism(gem_of(j), j.at("source").get<Point>(), j.at("target").get<Point>());
  });
}

std::string complex_to_json(const SimplicialCellComplex& cx)
{
  json faces = json::array();
  for (const auto& f : cx.faces())
    faces.push_back(json{{"id", f.id}, {"dim", f.dim}, {"colors", f.colors}, {"boundary", f.boundary}});
  json signs = json::object();
  for (const auto& [id, s] : cx.signs())
    signs[std::to_string(id)] = s;
  return json{{"n", cx.dimension()}, {"faces", std::move(faces)}, {"signs", std::move(signs)}}.dump();
}

SimplicialCellComplex complex_from_json(std::string_view text)
{
  const auto j = parse(text);
  return reading("complex", [&] {
    std::vector<Face> faces;
    for (const auto& f : j.at("faces")) {
      Face face;
      face.id = f.at("id").get<FaceId>();
      face.dim = f.at("dim").get<int>();
      face.colors = f.value("colors", std::vector<int>{});
      face.boundary = f.value("boundary", std::vector<FaceId>{});
      faces.push_back(std::move(face));
    }
    std::map<FaceId, int> signs;
    const json sign_map = j.value("signs", json::object());
    for (const auto& [key, value] : sign_map.items()) {
      std::size_t used = 0;
      long long id = 0;
      try {
        id = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size())
        throw ParseError("sign key \"" + key + "\" is not a face id");
      signs[id] = value.get<int>();
    }
    return SimplicialCellComplex(j.at("n").get<int>(), std::move(faces), std::move(signs));
  });
}

std::string state_to_json(const TensorState& xi)
{
  std::vector<double> re, im;
  for (const auto& z : xi.coefficients()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return json{{"dims", xi.dims()}, {"re", re}, {"im", im}}.dump();
}

TensorState state_from_json(std::string_view text)
{
  const auto j = parse(text);
  return reading("state", [&] {
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.value("im", std::vector<double>(re.size(), 0.0));
    if (im.size() != re.size())
      throw StructuralError("\"re\" and \"im\" have different lengths");
    std::vector<Complex> coeffs(re.size());
    for (std::size_t i = 0; i < re.size(); ++i)
      coeffs[i] = {re[i], im[i]};
    return TensorState(std::move(dims), std::move(coeffs));
  });
}

std::string matrix_to_json(const OperatorMatrix& m)
{
  return json{{"rows", m.rows}, {"cols", m.cols}, {"re", split(m, false)}, {"im", split(m, true)}}
      .dump();
}

OperatorMatrix matrix_from_json(std::string_view text)
{
  const auto j = parse(text);
  return reading("matrix", [&] {
    OperatorMatrix m;
    m.rows = j.at("rows").get<std::size_t>();
    m.cols = j.at("cols").get<std::size_t>();
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const auto im = j.at("im").get<std::vector<std::vector<double>>>();
    if (re.size() != m.rows || im.size() != m.rows)
      throw StructuralError("matrix row count mismatch");
    m.data.resize(m.rows * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (re[i].size() != m.cols || im[i].size() != m.cols)
        throw StructuralError("matrix column count mismatch in row " + std::to_string(i));
      for (std::size_t k = 0; k < m.cols; ++k)
        m(i, k) = {re[i][k], im[i][k]};
    }
    return m;
  });
}

std::string format_complex(Complex z)
{
  const double re = z.real() == 0 ? 0.0 : z.real();
  const double im = z.imag() == 0 ? 0.0 : z.imag();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12f %c %.12fi", re, std::signbit(im) ? '-' : '+', std::fabs(im));
  return buf;
}

std::string matrix_to_text(const OperatorMatrix& m)
{
  std::ostringstream out;
  char buf[80];
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t k = 0; k < m.cols; ++k) {
      const auto z = m(i, k);
      std::snprintf(buf, sizeof buf, "%s%.12g%+.12gi", k ? " " : "", z.real() == 0 ? 0.0 : z.real(),
                    z.imag() == 0 ? 0.0 : z.imag());
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

} // namespace psb
