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

#include "psb/canonical.hpp"

#include <algorithm>
#include <limits>

#include "psb/error.hpp"
#include "../detail/disjoint_sets.hpp"

namespace psb {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

struct ComponentCode {
  std::vector<std::uint64_t> code;
  std::vector<std::size_t> best_starts;
};

// Breadth-first code from `start`: for every vertex in discovery order, its class
// followed by the discovery rank + 1 of each colored neighbor (0 when absent).
// Returns false as soon as the code becomes larger than `bound`.
bool bfs_code(const ColoredGraph& g, std::size_t start, std::vector<std::size_t>& rank,
              std::vector<std::size_t>& order, std::vector<std::uint64_t>& code,
              const std::vector<std::uint64_t>* bound)
{
  code.clear();
  order.clear();
  order.push_back(start);
  rank[start] = 0;
  bool tied = bound != nullptr;

  auto emit = [&](std::uint64_t value) {
    if (tied) {
      const auto pos = code.size();
      if (value > (*bound)[pos])
        return false;
      if (value < (*bound)[pos])
        tied = false;
    }
    code.push_back(value);
    return true;
  };

  bool ok = true;
  for (std::size_t head = 0; head < order.size() && ok; ++head) {
    const auto v = order[head];
    ok = emit(g.vertex_class[v]);
    for (std::size_t c = 0; c < g.colors && ok; ++c) {
      const auto w = g.neighbor(v, c);
      if (w < 0) {
        ok = emit(0);
        continue;
      }
      const auto u = static_cast<std::size_t>(w);
      if (rank[u] == kUnseen) {
        rank[u] = order.size();
        order.push_back(u);
      }
      ok = emit(rank[u] + 1);
    }
  }
  for (auto v : order)
    rank[v] = kUnseen;
  return ok;
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v)
{
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

std::vector<ComponentCode> component_codes(const ColoredGraph& g)
{
  const auto n = g.vertex_count();
  if (g.adjacency.size() != n * g.colors)
    throw StructuralError("colored graph adjacency has the wrong size");

  detail::DisjointSets sets(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < g.colors; ++c) {
      const auto w = g.neighbor(v, c);
      if (w >= 0)
        sets.unite(v, static_cast<std::size_t>(w));
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t v = 0; v < n; ++v)
    groups[sets.find(v)].push_back(v);

  std::vector<std::size_t> rank(n, kUnseen), order;
  std::vector<std::uint64_t> scratch;
  std::vector<ComponentCode> out;
  for (auto& members : groups) {
    if (members.empty())
      continue;
    std::uint64_t min_class = std::numeric_limits<std::uint64_t>::max();
    for (auto v : members)
      min_class = std::min(min_class, g.vertex_class[v]);

    ComponentCode cc;
    for (auto v : members) {
      if (g.vertex_class[v] != min_class)
        continue;
      if (cc.best_starts.empty()) {
        bfs_code(g, v, rank, order, cc.code, nullptr);
        cc.best_starts.push_back(v);
        continue;
      }
      if (!bfs_code(g, v, rank, order, scratch, &cc.code))
        continue;
      if (scratch == cc.code) {
        cc.best_starts.push_back(v);
      } else {
        cc.code.swap(scratch);
        cc.best_starts.assign(1, v);
      }
    }
    out.push_back(std::move(cc));
  }
  return out;
}

} // namespace

std::vector<std::uint8_t> canonical_code(const ColoredGraph& g)
{
  auto comps = component_codes(g);
  std::vector<const std::vector<std::uint64_t>*> codes;
  codes.reserve(comps.size());
  for (const auto& cc : comps)
    codes.push_back(&cc.code);
  std::sort(codes.begin(), codes.end(), [](auto* a, auto* b) { return *a < *b; });

  std::vector<std::uint8_t> out;
  put_varint(out, g.colors);
  put_varint(out, codes.size());
  for (const auto* code : codes) {
    put_varint(out, code->size());
    for (auto v : *code)
      put_varint(out, v);
  }
  return out;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes)
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 0xf];
  }
  return s;
}

} // namespace psb
