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

#include "plconvex/error.hpp"

namespace plconvex {

std::string_view to_string(Code code) {
  switch (code) {
    case Code::INVALID_ID: return "INVALID_ID";
    case Code::MISSING_RANK: return "MISSING_RANK";
    case Code::UNEXPECTED_RANK: return "UNEXPECTED_RANK";
    case Code::DUPLICATE_REFERENCE: return "DUPLICATE_REFERENCE";
    case Code::VERTEX_CONTAINMENT: return "VERTEX_CONTAINMENT";
    case Code::NOT_CLOSED: return "NOT_CLOSED";
    case Code::NOT_CONNECTED: return "NOT_CONNECTED";
    case Code::NOT_SINGLE_CYCLE: return "NOT_SINGLE_CYCLE";
    case Code::MISSING_GEOMETRY: return "MISSING_GEOMETRY";
    case Code::DEGENERATE_FACE: return "DEGENERATE_FACE";
    case Code::ZERO_NORMAL: return "ZERO_NORMAL";
    case Code::WITNESS_OFF_FACET: return "WITNESS_OFF_FACET";
    case Code::ZERO_DIRECTION: return "ZERO_DIRECTION";
    case Code::OPPOSITE_DIRECTIONS: return "OPPOSITE_DIRECTIONS";
    case Code::FLAT_SURFACE: return "FLAT_SURFACE";
    case Code::DEGENERATE: return "DEGENERATE";
    case Code::PARSE_ERROR: return "PARSE_ERROR";
    case Code::SEMANTIC_ERROR: return "SEMANTIC_ERROR";
    case Code::NON_MANIFOLD: return "NON_MANIFOLD";
    case Code::BAD_PARAMETER: return "BAD_PARAMETER";
  }
  return "UNKNOWN";
}

Error::Error(Code code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace plconvex
