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

#include <sstream>

#include "psb/io.hpp"

namespace psb {

std::string gem_to_dot(const Gem& gem)
{
  std::ostringstream out;
  out << "graph gem {\n";
  out << "  edge [colorscheme=set19];\n";
  auto node = [&](Sign sign, std::uint32_t index) {
    const char prefix = sign == Sign::plus ? 'p' : 'm';
    const Label l = gem.label(Chamber{sign, index});
    out << "  " << prefix << index + 1 << " [shape=" << (sign == Sign::plus ? "box" : "ellipse")
        << ", label=\"" << (sign == Sign::plus ? '+' : '-') << index + 1;
    if (l != kNoLabel)
      out << " [" << l << "]";
    out << "\"];\n";
  };
  for (std::uint32_t p = 0; p < gem.size(); ++p)
    node(Sign::plus, p);
  for (std::uint32_t q = 0; q < gem.size(); ++q)
    node(Sign::minus, q);
  for (std::size_t c = 0; c < gem.colors(); ++c)
    for (std::uint32_t p = 0; p < gem.size(); ++p)
      out << "  p" << p + 1 << " -- m" << gem.match(c, p) + 1 << " [color=" << c + 1
          << ", label=\"" << c << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace psb
