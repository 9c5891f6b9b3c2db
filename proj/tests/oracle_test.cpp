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

#include <gtest/gtest.h>

#include <algorithm>

#include "plconvex/instances.hpp"
#include "plconvex/oracle.hpp"

namespace plconvex {
namespace {

std::vector<std::vector<Index>> surface_facets(const PLSurface& s) {
  std::vector<std::vector<Index>> out;
  for (Index h = 0; h < s.poset().count(Rank::Facet); ++h) {
    auto vs = s.poset().vertices(Rank::Facet, h);
    out.emplace_back(vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(OracleTest, ConvexFamilies) {
  for (int n = 3; n <= 5; ++n) {
    EXPECT_TRUE(oracle_verdict(gen_hypercube(n)).convex);
    EXPECT_TRUE(oracle_verdict(gen_cross_polytope(n)).convex);
    EXPECT_TRUE(oracle_verdict(gen_simplex(n)).convex);
  }
  EXPECT_TRUE(oracle_verdict(gen_prism(6)).convex);
  EXPECT_TRUE(oracle_verdict(gen_split_cube()).convex);
}

TEST(OracleTest, DentedCubeViolatesADentTriangle) {
  const PLSurface s = gen_dented_cube(1);
  const OracleVerdict v = oracle_verdict(s);
  ASSERT_FALSE(v.convex);
  ASSERT_TRUE(v.violating_facet && v.violating_vertex);
  // The bottom square became facets 0..3, triangles to the apex (1/2,1/2,1/4).
  EXPECT_LT(v.violating_facet->index, 4u);
  auto tri = s.poset().vertices(Rank::Facet, v.violating_facet->index);
  ASSERT_EQ(tri.size(), 3u);
  EXPECT_EQ(tri.back(), 8u);
  // Independent sign evaluation: the original corners straddle the plane.
  const auto& xs = s.vertices();
  const RVec normal = cross(xs[tri[1]] - xs[tri[0]], xs[tri[2]] - xs[tri[0]]);
  bool pos = false, neg = false;
  for (Index c = 0; c < 8; ++c) {
    const int side = sgn(dot(normal, xs[c] - xs[tri[0]]));
    pos |= side > 0;
    neg |= side < 0;
  }
  EXPECT_TRUE(pos && neg);
  const Hyperplane h = facet_hyperplane(s, v.violating_facet->index);
  EXPECT_GT(dot(h.normal, xs[*v.violating_vertex]) - h.offset, 0);
}

TEST(OracleTest, SchonhardtIsNotConvex) {
  const OracleVerdict v = oracle_verdict(gen_schonhardt());
  EXPECT_FALSE(v.convex);
  // Side triangle {0,1,4}: vertex 3 lies beyond it.
  EXPECT_EQ(v.violating_facet, (FaceId{2, 2}));
  EXPECT_EQ(v.violating_vertex, 3u);
}

TEST(OracleTest, DoubledSquareIsFlat) {
  const std::vector<RVec> xs = {make_vec({0, 0, 0}), make_vec({1, 0, 0}), make_vec({1, 1, 0}),
                                make_vec({0, 1, 0})};
  const PLSurface s = polyhedron_from_cycles(xs, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  try {
    oracle_verdict(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Code::FLAT_SURFACE);
  }
}

TEST(OracleTest, InvariantUnderRelabelingAndAffineMaps) {
  for (const PLSurface& s : {gen_hypercube(4), gen_schonhardt(), gen_dented_cube(2),
                             dent(gen_cross_polytope(4), 0, Rational(3, 2))}) {
    const bool convex = oracle_verdict(s).convex;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      EXPECT_EQ(oracle_verdict(relabel_faces(s, seed)).convex, convex);
      const AffineMap m = random_affine(s.n(), seed);
      EXPECT_EQ(oracle_verdict(affine_map(s, m.a, m.b)).convex, convex);
    }
  }
}

TEST(HullTest, StandardSolids) {
  const auto cube = hull_facets_3d(gen_hypercube(3).vertices());
  ASSERT_EQ(cube.size(), 6u);
  for (const auto& f : cube) EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(cube, surface_facets(gen_hypercube(3)));

  const auto tet = hull_facets_3d(gen_simplex(3).vertices());
  EXPECT_EQ(tet.size(), 4u);
  const auto oct = hull_facets_3d(gen_cross_polytope(3).vertices());
  ASSERT_EQ(oct.size(), 8u);
  for (const auto& f : oct) EXPECT_EQ(f.size(), 3u);
}

TEST(HullTest, MatchesConvexSurfaces) {
  for (int m = 3; m <= 12; ++m)
    for (std::uint64_t seed : {0, 3}) {
      const PLSurface s = rigid_motion(gen_prism(m), seed);
      EXPECT_EQ(hull_facets_3d(s.vertices()), surface_facets(s)) << "m=" << m;
    }
  // Coplanar facets merge: the split top collapses to one hexagon-set.
  const auto split = hull_facets_3d(gen_split_cube().vertices());
  ASSERT_EQ(split.size(), 6u);
  EXPECT_NE(std::find(split.begin(), split.end(), std::vector<Index>{4, 5, 6, 7, 8, 9}),
            split.end());
}

TEST(HullTest, NonConvexSurfacesDiffer) {
  const PLSurface s = gen_schonhardt();
  const auto hull = hull_facets_3d(s.vertices());
  EXPECT_EQ(hull.size(), 8u);
  EXPECT_NE(hull, surface_facets(s));
  // The hull uses the opposite diagonals.
  EXPECT_NE(std::find(hull.begin(), hull.end(), std::vector<Index>{0, 1, 3}), hull.end());
}

TEST(HullTest, InteriorAndCollinearPointsAreDropped) {
  std::vector<RVec> pts = gen_hypercube(3).vertices();
  pts.push_back(RVec{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  pts.push_back(RVec{Rational(1, 2), 0, 0});
  const auto hull = hull_facets_3d(pts);
  ASSERT_EQ(hull.size(), 6u);
  for (const auto& f : hull) EXPECT_EQ(std::count(f.begin(), f.end(), Index{8}), 0);
}

TEST(HullTest, DegenerateInput) {
  const std::vector<RVec> flat = {make_vec({0, 0, 0}), make_vec({1, 0, 0}), make_vec({0, 1, 0}),
                                  make_vec({1, 1, 0})};
  EXPECT_THROW(hull_facets_3d(flat), Error);
  EXPECT_THROW(hull_facets_3d(std::vector<RVec>(flat.begin(), flat.begin() + 3)), Error);
}

}  // namespace
}  // namespace plconvex
