// Copyright 2026 The plconvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "plconvex/surface.hpp"

namespace plconvex {

// PLS documents are JSON:
//
//   {
//     "n": 3,
//     "mode": "vertices",
//     "vertices": [["0", "0", "0"], ["1/2", "1", "0"], ...],
//     "faces": {
//       "0": [{"id": 0, "up": [0, 3, 8]}, ...],
//       "1": [{"id": 0, "vertices": [0, 1], "up": [0, 2]}, ...],
//       "2": [{"id": 0, "vertices": [0, 1, 3, 2]}, ...]
//     }
//   }
//
// Face keys are the dimensions n-3, n-2 and n-1 as strings. Rationals are
// "p/q" strings or JSON integers. An absent "up" list is derived from
// vertex-list containment. In equations mode records carry "up" and
// "witness" instead of "vertices", the top-level "vertices" is omitted and
// "equations" holds one {"normal": [...], "offset": "p/q"} per facet.

/// Throws Error(PARSE_ERROR) for malformed text or fields, with a JSON path
/// or line number in the message, and Error(SEMANTIC_ERROR) when the poset
/// fails validate_poset.
PLSurface parse_pls(std::string_view text);

/// Canonical text: one vertex, face record or equation per line.
std::string emit_pls(const PLSurface& surface);

/// OFF polyhedron (n = 3). Decimal coordinates are converted exactly; extra
/// tokens after a facet's vertex list (colors) are ignored.
PLSurface parse_off(std::string_view text);

/// Reads a file, choosing OFF by ".off" extension or an "OFF" header.
PLSurface load_surface(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace plconvex
