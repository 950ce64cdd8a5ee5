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

#include <cstdint>
#include <string>
#include <vector>

namespace psb {

/// A graph whose edges carry one of `colors` colors, with at most one edge of
/// each color at every vertex. Vertices carry an integer class; vertices with a
/// unique class act as anchors during canonical labeling.
struct ColoredGraph {
  std::size_t colors = 0;
  std::vector<std::uint64_t> vertex_class;
  /// adjacency[v * colors + c] is the color-c neighbor of v, or -1.
  std::vector<std::int64_t> adjacency;

  std::size_t vertex_count() const { return vertex_class.size(); }
  std::int64_t neighbor(std::size_t v, std::size_t c) const { return adjacency[v * colors + c]; }
};

/// Canonical byte string of a colored graph: equal iff the graphs are isomorphic
/// by a color- and class-preserving bijection.
///
/// In a connected graph of this kind an isomorphism is fixed by the image of a
/// single vertex, so individualizing one vertex refines the partition to discrete
/// cells. Each component is therefore encoded by the lexicographically least
/// breadth-first code over start vertices of minimal class, and the component
/// codes are sorted.
std::vector<std::uint8_t> canonical_code(const ColoredGraph& graph);

std::string to_hex(const std::vector<std::uint8_t>& bytes);

} // namespace psb
