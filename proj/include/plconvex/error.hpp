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

#include <stdexcept>
#include <string>
#include <string_view>

namespace plconvex {

/// Machine-readable codes shared by validation reports, thrown errors and
/// verdicts. The spelling returned by to_string() is part of the CLI output.
enum class Code {
  // poset structure
  INVALID_ID,
  MISSING_RANK,
  UNEXPECTED_RANK,
  DUPLICATE_REFERENCE,
  VERTEX_CONTAINMENT,
  // manifold preconditions
  NOT_CLOSED,
  NOT_CONNECTED,
  NOT_SINGLE_CYCLE,
  // realization
  MISSING_GEOMETRY,
  DEGENERATE_FACE,
  ZERO_NORMAL,
  WITNESS_OFF_FACET,
  ZERO_DIRECTION,
  OPPOSITE_DIRECTIONS,
  // oracle
  FLAT_SURFACE,
  DEGENERATE,
  // io
  PARSE_ERROR,
  SEMANTIC_ERROR,
  NON_MANIFOLD,
  BAD_PARAMETER,
};

std::string_view to_string(Code code);

class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& message);

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

}  // namespace plconvex
