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

#include "psb/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "psb/error.hpp"

namespace psb {

Permutation Permutation::from_pairs(std::vector<Pair> pairs)
{
  std::erase_if(pairs, [](const Pair& p) { return p.first == p.second; });
  std::sort(pairs.begin(), pairs.end());

  std::vector<Point> targets;
  targets.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first == 0 || pairs[i].second == 0)
      throw StructuralError("permutation points must be positive integers");
    if (i > 0 && pairs[i].first == pairs[i - 1].first)
      throw StructuralError("point " + std::to_string(pairs[i].first) + " has two images");
    targets.push_back(pairs[i].second);
  }
  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (targets[i] != pairs[i].first)
      throw StructuralError("mapping is not a bijection of its support");
  }

  Permutation result;
  result.map_ = std::move(pairs);
  return result;
}

Permutation Permutation::from_images(const std::vector<Point>& images)
{
  std::vector<Pair> pairs;
  pairs.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0 || images[i] > images.size())
      throw StructuralError("image " + std::to_string(images[i]) + " out of range 1.." +
                            std::to_string(images.size()));
    pairs.emplace_back(static_cast<Point>(i + 1), images[i]);
  }
  return from_pairs(std::move(pairs));
}

Permutation Permutation::from_cycle(const std::vector<Point>& cycle)
{
  std::vector<Pair> pairs;
  pairs.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i)
    pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return from_pairs(std::move(pairs));
}

Point Permutation::operator()(Point x) const
{
  auto it = std::lower_bound(map_.begin(), map_.end(), x,
                             [](const Pair& p, Point v) { return p.first < v; });
  return (it != map_.end() && it->first == x) ? it->second : x;
}

std::vector<Point> Permutation::support() const
{
  std::vector<Point> s;
  s.reserve(map_.size());
  for (const auto& [src, dst] : map_)
    s.push_back(src);
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  std::vector<Point> domain = p.support();
  const auto qs = q.support();
  domain.insert(domain.end(), qs.begin(), qs.end());
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

  std::vector<Permutation::Pair> pairs;
  pairs.reserve(domain.size());
  for (Point x : domain)
    pairs.emplace_back(x, p(q(x)));
  return Permutation::from_pairs(std::move(pairs));
}

Permutation inverse(const Permutation& p)
{
  std::vector<Permutation::Pair> pairs;
  pairs.reserve(p.pairs().size());
  for (const auto& [src, dst] : p.pairs())
    pairs.emplace_back(dst, src);
  return Permutation::from_pairs(std::move(pairs));
}

Permutation theta(Point sigma, Point j)
{
  std::vector<Permutation::Pair> pairs;
  pairs.reserve(2 * static_cast<std::size_t>(j));
  for (Point i = 1; i <= j; ++i) {
    pairs.emplace_back(sigma + i, sigma + j + i);
    pairs.emplace_back(sigma + j + i, sigma + i);
  }
  return Permutation::from_pairs(std::move(pairs));
}

std::vector<std::vector<Point>> cycles(const Permutation& p)
{
  std::vector<std::vector<Point>> result;
  std::set<Point> seen;
  // Sources are visited in increasing order, so each cycle starts at its least element.
  for (const auto& [start, unused] : p.pairs()) {
    if (seen.contains(start))
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen.contains(x); x = p(x)) {
      seen.insert(x);
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what)
{
  std::size_t end = pos;
  while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
         text[end] != '(' && text[end] != ')')
    ++end;
  if (end == pos && pos < text.size())
    end = pos + 1;
  std::string token = pos < text.size() ? std::string(text.substr(pos, end - pos)) : "<end of input>";
  throw ParseError(what + " at offset " + std::to_string(pos) + ": '" + token + "'");
}

} // namespace

Permutation parse_permutation(std::string_view text)
{
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_space();
    if (pos != text.size())
      parse_fail(text, pos, "unexpected token after identity");
    return {};
  }
  if (pos == text.size())
    parse_fail(text, pos, "empty permutation");

  std::vector<Permutation::Pair> pairs;
  std::set<Point> used;
  while (true) {
    skip_space();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      parse_fail(text, pos, "expected '('");
    ++pos;

    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (pos == text.size())
        parse_fail(text, pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      Point value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + pos)
        parse_fail(text, start, "expected a positive integer");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
          text[pos] != ')')
        parse_fail(text, start, "malformed point");
      if (value == 0)
        parse_fail(text, start, "points must be positive");
      if (!used.insert(value).second)
        parse_fail(text, start, "repeated point");
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  return Permutation::from_pairs(std::move(pairs));
}

std::string format_permutation(const Permutation& p)
{
  if (p.is_identity())
    return "e";
  std::string out;
  for (const auto& cycle : cycles(p)) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

} // namespace psb
