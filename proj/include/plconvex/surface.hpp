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

#include <array>
#include <vector>

#include "plconvex/complex.hpp"
#include "plconvex/exactgeom.hpp"
#include "plconvex/rational.hpp"

namespace plconvex {

/// { x : normal . x = offset }
struct Hyperplane {
  RVec normal;
  Rational offset;
};

/// Derived per-face data, computed once when the surface is built.
struct FaceGeometry {
  /// A point of the relative interior of the face; empty when the face's
  /// geometry is unusable (bad ids, missing coordinates).
  RVec interior;
  /// Vertex mode: dimension of the affine hull of the face's vertices.
  int affine_dim = -1;
  /// Vertex mode: affinely independent vertices spanning that hull, picked
  /// greedily in increasing index order.
  std::vector<Index> frame;
};

/// A PL-realization of a closed (n-1)-manifold in Q^n: the partial face
/// poset plus either vertex coordinates or facet equations with interior
/// witness points. Immutable once built.
///
/// In vertex mode the interior point of a face is the barycenter of its
/// frame, a simplex spanning the face's affine hull; for convex cells this
/// lies in the relative interior.
class PLSurface {
 public:
  PLSurface() = default;

  static PLSurface from_vertices(FacePoset poset, std::vector<RVec> coords);
  /// `witnesses` holds one point per face for peaks, ridges and facets.
  static PLSurface from_equations(FacePoset poset, std::vector<Hyperplane> facets,
                                  std::array<std::vector<RVec>, 3> witnesses);

  int n() const { return poset_.n(); }
  GeometryMode mode() const { return mode_; }
  const FacePoset& poset() const { return poset_; }
  const std::vector<RVec>& vertices() const { return coords_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }
  const std::vector<RVec>& witnesses(Rank r) const { return witnesses_[static_cast<int>(r)]; }

  const FaceGeometry& geometry(Rank r, Index i) const {
    return geometry_[static_cast<int>(r)][i];
  }
  const RVec& interior_point(Rank r, Index i) const { return geometry(r, i).interior; }

 private:
  void prepare();

  FacePoset poset_;
  GeometryMode mode_ = GeometryMode::Vertices;
  std::vector<RVec> coords_;
  std::vector<Hyperplane> equations_;
  std::array<std::vector<RVec>, 3> witnesses_;
  std::array<std::vector<FaceGeometry>, 3> geometry_;
};

/// Realization preconditions: every stored face spans an affine subspace of
/// its own dimension (vertex mode), or every facet has a nonzero normal and
/// every witness satisfies the equations of the facets containing its face
/// (equations mode).
ValidationReport check_realization(const PLSurface& surface);

/// Basis of the direction space of a peak's affine hull. Throws
/// Error(DEGENERATE_FACE) when its dimension is not n-3.
Basis direction_space(const PLSurface& surface, Index peak);

/// Facets containing a peak (the facets of its star), sorted.
std::vector<Index> star_facets(const FacePoset& poset, Index peak);

}  // namespace plconvex
