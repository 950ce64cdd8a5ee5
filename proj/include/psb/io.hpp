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

#include <string>
#include <string_view>

#include "psb/gem.hpp"
#include "psb/pseudobordism.hpp"
#include "psb/rep.hpp"
#include "psb/topology.hpp"

namespace psb {

// JSON encodings. Chambers and matching targets are 1-based, colors 0-based.
// Readers throw ParseError on malformed JSON and StructuralError on invalid content.

/// {"n", "L", "matchings": [[targets]], "plus_labels": {"label": chamber}, "minus_labels": {...}}
std::string gem_to_json(const Gem& gem);
Gem gem_from_json(std::string_view text);

/// The gem encoding plus {"source", "target"}.
std::string bordism_to_json(const Pseudobordism& sigma);
Pseudobordism bordism_from_json(std::string_view text);

/// {"n", "faces": [{"id", "dim", "colors", "boundary"}], "signs": {"id": +-1}}
std::string complex_to_json(const SimplicialCellComplex& cx);
SimplicialCellComplex complex_from_json(std::string_view text);

/// {"dims", "re", "im"}, row-major with color 0 slowest; "im" may be omitted.
std::string state_to_json(const TensorState& xi);
TensorState state_from_json(std::string_view text);

/// {"rows", "cols", "re": [[...]], "im": [[...]]}
std::string matrix_to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(std::string_view text);
/// One line per row, entries "re+imi" separated by spaces.
std::string matrix_to_text(const OperatorMatrix& m);

/// Graphviz: one node per chamber (box = plus, ellipse = minus), one edge per
/// matching pair, colored by its color index.
std::string gem_to_dot(const Gem& gem);

/// "a + bi" / "a - bi" with 12 digits after the point.
std::string format_complex(Complex z);

} // namespace psb
