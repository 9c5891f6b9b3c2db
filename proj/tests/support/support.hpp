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

#include <random>
#include <vector>

#include "plconvex/surface.hpp"

namespace plconvex::testing {

// Supporting-plane test on one vertex star of a vertex-mode n = 3 surface:
// every star facet's plane has all star vertices weakly on one side.
bool star_supported(const PLSurface& surface, Index vertex);

// Vertices whose star fails star_supported, ascending.
std::vector<Index> unsupported_vertices(const PLSurface& surface);

// Stacked simplicial sphere: a tetrahedron whose triangles are repeatedly
// replaced by three triangles to a point offset from the centroid along the
// outward normal. Offsets are drawn from [-3/16, 6/16], so both convex and
// dented results occur.
PLSurface random_stacked(std::mt19937_64& rng, int steps);

}  // namespace plconvex::testing
