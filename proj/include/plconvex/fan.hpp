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
#include <string_view>
#include <vector>

#include "plconvex/complex.hpp"
#include "plconvex/exactgeom.hpp"
#include "plconvex/surface.hpp"

namespace plconvex {

/// One direction of a projected star: a ray (the image of a ridge) or a
/// cell witness (direction to an interior point of a facet).
struct FanEntry {
  RVec dir;
  FaceId source;
};

/// The star of a peak projected into 3-space. Entries alternate ray,
/// witness, ray, witness, ... following the link cycle.
struct Fan3 {
  RVec apex;
  std::vector<FanEntry> entries;

  std::size_t ray_count() const { return entries.size() / 2; }
};

enum class Reason {
  OK_POINTED,
  OK_FLAT,
  NO_SUPPORT,
  BAD_ROTATION_INDEX,
  WRONG_TURN_SIGN,
  ZERO_ANGLE_CONE,
  DEGENERATE_RANK,
};

std::string_view to_string(Reason reason);

struct CCheckResult {
  bool convex = false;
  Reason reason = Reason::DEGENERATE_RANK;
};

/// Projects the star of `cycle.center` with `projection`. Throws
/// Error(ZERO_DIRECTION) if some face's interior point lands on the apex.
Fan3 build_fan(const PLSurface& surface, const LinkCycle& cycle, const Projection3& projection);

/// A vector s with s . u > 0 for every u, or nullopt if none exists.
/// Tries the normalized-sum heuristic first, then an exact search over
/// cross products.
std::optional<RVec> reference_direction(std::span<const RVec> dirs);

/// Number of turns of a cyclic sequence of nonzero plane directions.
/// Throws Error(OPPOSITE_DIRECTIONS) on an antiparallel consecutive pair.
int rotation_index(std::span<const RVec> dirs);

/// Convexity of a closed plane polygon; collinear vertices are allowed.
CCheckResult polygon_is_convex(std::span<const RVec> points);

/// Decides whether the fan is the boundary of a convex cone near its apex.
CCheckResult c_check(const Fan3& fan);

}  // namespace plconvex
