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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plconvex/surface.hpp"

namespace plconvex {

// Test-surface generators. Every generator is deterministic in its
// arguments; faces are emitted only in dimensions 0, n-3, n-2 and n-1.

/// [0,1]^n. Vertex i has coordinate bit j equal to bit j of i.
PLSurface gen_hypercube(int n);
/// conv{+-e_i}. Vertex 2i is +e_i, vertex 2i+1 is -e_i.
PLSurface gen_cross_polytope(int n);
/// conv{0, e_1, ..., e_n}. Vertex 0 is the origin.
PLSurface gen_simplex(int n);

/// Prism of height one over a convex m-gon inscribed in the unit circle.
/// Bottom vertices are 0..m-1, top vertices m..2m-1; facets are the bottom
/// cap, the top cap, then the m sides.
PLSurface gen_prism(int m);

/// Twisted triangular prism with triangulated sides: 8 triangles, three
/// reflex edges {0,4}, {1,5}, {2,3}.
PLSurface gen_schonhardt();

/// Unit cube whose first k facets (k <= 6) are each replaced by a pyramid
/// of four triangles whose apex sits 1/4 inside the facet's center. Apex
/// of the j-th dented facet is vertex 8 + j.
PLSurface gen_dented_cube(int k);

/// Unit cube with the top facet split into two coplanar rectangles through
/// the midpoints (1/2,0,1) and (1/2,1,1), vertices 8 and 9.
PLSurface gen_split_cube();

/// n = 3 surface from facet vertex cycles. Edges are the consecutive pairs
/// of each cycle, deduplicated in order of first appearance. Throws
/// Error(NON_MANIFOLD) when an edge lies in other than two facets and
/// Error(PARSE_ERROR) when a cycle repeats a vertex or has fewer than three.
PLSurface polyhedron_from_cycles(std::vector<RVec> coords,
                                 const std::vector<std::vector<Index>>& cycles);

/// Moves vertex v to v - t (v - c), c the centroid of all vertices.
PLSurface dent(const PLSurface& surface, Index vertex, const Rational& t);

/// x -> A x + b. Throws Error(BAD_PARAMETER) unless det A > 0.
PLSurface affine_map(const PLSurface& surface, const std::vector<RVec>& a, const RVec& b);

/// Pseudo-random rigid-like motion: a product of Pythagorean rotations and
/// shears plus a translation. Seed 0 is the identity.
PLSurface rigid_motion(const PLSurface& surface, std::uint64_t seed);

/// Random integer matrix with positive determinant and a random rational
/// translation, for invariance tests.
struct AffineMap {
  std::vector<RVec> a;
  RVec b;
};
AffineMap random_affine(int n, std::uint64_t seed);

PLSurface scale(const PLSurface& surface, const Rational& factor);

/// Applies independent random permutations to the vertices and to each
/// stored rank (for n = 3 the peak permutation is the vertex permutation).
PLSurface relabel_faces(const PLSurface& surface, std::uint64_t seed);

/// Same surface in equations mode: one hyperplane per facet, interior
/// points as witnesses, vertex lists dropped.
PLSurface to_equations_mode(const PLSurface& surface);

Rational determinant(std::vector<RVec> m);

/// Family names accepted by generate(): hypercube, cross-polytope, simplex,
/// prism, schonhardt, dented-cube, split-cube.
struct GenSpec {
  std::string family;
  /// n for hypercube, cross-polytope and simplex; m for prism; number of
  /// dented facets for dented-cube. Ignored otherwise.
  int size = 3;
  std::optional<Index> dent_vertex;
  Rational dent_t = 0;
  /// rigid_motion seed applied last.
  std::uint64_t seed = 0;
};

PLSurface generate(const GenSpec& spec);

}  // namespace plconvex
