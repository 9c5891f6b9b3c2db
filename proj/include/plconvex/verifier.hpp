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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plconvex/complex.hpp"
#include "plconvex/exactgeom.hpp"
#include "plconvex/fan.hpp"
#include "plconvex/surface.hpp"

namespace plconvex {

enum class FaceStatus { Convex, NotConvex, Invalid };

/// Outcome of checking the star of one peak. `reason` is a Reason name for
/// convex/not-convex stars and a Code name for invalid ones.
struct FaceCheck {
  FaceStatus status = FaceStatus::Invalid;
  std::string reason;
  /// Fan entries handed to c_check (0 if the fan was never built).
  std::size_t entries = 0;
};

/// link_cycle -> direction_space -> complementary_projection -> build_fan
/// -> c_check for a single peak.
FaceCheck verify_face(const PLSurface& surface, Index peak,
                      ProjectionRoute route = ProjectionRoute::CoordinateFirst);

/// Same, with a caller-supplied projection whose kernel must be the peak's
/// direction space.
FaceCheck verify_face(const PLSurface& surface, Index peak, const Projection3& projection);

enum class VerdictKind { Convex, NotConvex, Invalid };

struct FaceFailure {
  FaceId face;
  FaceStatus status;
  std::string reason;
};

struct VerifyStats {
  std::size_t faces_checked = 0;
  std::size_t entry_evaluations = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Invalid;
  /// Least-index failing peak (or the face named by a preflight violation).
  std::optional<FaceId> witness;
  std::string reason;
  /// Every failing peak, when collect_all was requested.
  std::vector<FaceFailure> failures;
  VerifyStats stats;
};

struct VerifyOptions {
  bool parallel = false;
  bool collect_all = false;
  /// OpenMP team size for parallel mode; 0 keeps the runtime default.
  int threads = 0;
  ProjectionRoute route = ProjectionRoute::CoordinateFirst;
};

/// validate_poset, check_closed, check_connected and check_realization in
/// that order; the first failing report is returned.
ValidationReport preflight(const PLSurface& surface);

/// Decides whether the surface bounds a convex polyhedron by checking the
/// star of every peak. The serial path stops at the first failing peak;
/// the parallel path evaluates stars concurrently and reduces to the same
/// least-index witness.
Verdict verify(const PLSurface& surface, const VerifyOptions& options = {});

std::string_view to_string(VerdictKind kind);

}  // namespace plconvex
