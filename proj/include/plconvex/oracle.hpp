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

#include <optional>
#include <span>
#include <vector>

#include "plconvex/surface.hpp"

namespace plconvex {

// Brute-force convexity decision by global supporting hyperplanes. It shares
// nothing with the star-by-star verifier beyond exact arithmetic and exists
// to cross-check it on desk-scale inputs.

struct OracleVerdict {
  bool convex = false;
  std::optional<FaceId> violating_facet;
  std::optional<Index> violating_vertex;
};

/// Convex iff every facet's hyperplane has all surface vertices weakly on
/// one side and at least one strictly off it. Assumes a vertex-mode surface
/// that passed preflight; throws Error(FLAT_SURFACE) when all vertices lie
/// in one hyperplane.
OracleVerdict oracle_verdict(const PLSurface& surface);

/// Supporting hyperplane of a facet through its frame, oriented so that the
/// normal points away from the first vertex found strictly off it.
Hyperplane facet_hyperplane(const PLSurface& surface, Index facet);

/// Facets of the convex hull of points in Q^3 by gift wrapping, coplanar
/// triangles merged. Each facet is the sorted list of input indices lying
/// on it; the list of facets is sorted. Throws Error(DEGENERATE) when the
/// points are coplanar.
std::vector<std::vector<Index>> hull_facets_3d(std::span<const RVec> points);

}  // namespace plconvex
