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

#include <iosfwd>
#include <string>
#include <vector>

namespace plconvex {

/// Exit codes of `verify`; every other failure also exits with kExitInvalid.
inline constexpr int kExitConvex = 0;
inline constexpr int kExitNotConvex = 1;
inline constexpr int kExitInvalid = 2;

/// Entry point of the `plconvex` tool (subcommands verify, gen, bench).
/// argv[0] is the program name.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace plconvex
