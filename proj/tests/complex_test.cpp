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

#include "plconvex/complex.hpp"
#include "plconvex/instances.hpp"

namespace plconvex {
namespace {

std::vector<Index> to_vector(std::span<const Index> s) { return {s.begin(), s.end()}; }

struct FVec {
  std::size_t peaks, ridges, facets;
};

FVec fvec(const PLSurface& s) {
  const FacePoset& p = s.poset();
  return {p.count(Rank::Peak), p.count(Rank::Ridge), p.count(Rank::Facet)};
}

TEST(FaceIdTest, Names) {
  EXPECT_EQ(to_string(FaceId{0, 3}), "v3");
  EXPECT_EQ(to_string(FaceId{1, 12}), "e12");
  EXPECT_EQ(to_string(FaceId{2, 0}), "f2:0");
  EXPECT_LT((FaceId{0, 9}), (FaceId{1, 0}));
}

TEST(PosetTest, StandardFVectors) {
  const FVec cube = fvec(gen_hypercube(3));
  EXPECT_EQ(cube.peaks, 8u);
  EXPECT_EQ(cube.ridges, 12u);
  EXPECT_EQ(cube.facets, 6u);
  const FVec tess = fvec(gen_hypercube(4));
  EXPECT_EQ(tess.peaks, 32u);
  EXPECT_EQ(tess.ridges, 24u);
  EXPECT_EQ(tess.facets, 8u);
  const FVec oct = fvec(gen_cross_polytope(3));
  EXPECT_EQ(oct.peaks, 6u);
  EXPECT_EQ(oct.ridges, 12u);
  EXPECT_EQ(oct.facets, 8u);
  const FVec s4 = fvec(gen_simplex(4));
  EXPECT_EQ(s4.peaks, 10u);
  EXPECT_EQ(s4.ridges, 10u);
  EXPECT_EQ(s4.facets, 5u);
  EXPECT_EQ(gen_hypercube(5).poset().count_dim(0), 32u);
  EXPECT_EQ(gen_hypercube(5).poset().count_dim(1), 0u);
}

TEST(PosetTest, IncidencesFollowContainment) {
  const FacePoset p = gen_hypercube(3).poset();
  EXPECT_EQ(p.peak_ridge_incidences(), 24u);
  for (Index g = 0; g < p.count(Rank::Ridge); ++g) {
    auto ev = p.vertices(Rank::Ridge, g);
    for (Index h : p.up(Rank::Ridge, g)) {
      auto fv = p.vertices(Rank::Facet, h);
      EXPECT_TRUE(std::includes(fv.begin(), fv.end(), ev.begin(), ev.end()));
    }
    EXPECT_EQ(p.up(Rank::Ridge, g).size(), 2u);
  }
  // Peaks of the 4-cube are edges; each lies in three squares.
  const FacePoset q = gen_hypercube(4).poset();
  for (Index f = 0; f < q.count(Rank::Peak); ++f) EXPECT_EQ(q.up(Rank::Peak, f).size(), 3u);
}

TEST(PosetTest, ValidateReportsBadIds) {
  PosetData d = gen_hypercube(3).poset().data();
  d.facets.vertices[2].back() = 99;
  const ValidationReport r = validate_poset(FacePoset(d));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().code, Code::INVALID_ID);
  EXPECT_EQ(r.violations.front().face, (FaceId{2, 2}));
}

TEST(PosetTest, ValidateReportsContainment) {
  PosetData d = gen_hypercube(3).poset().data();
  // Edge 0 is {0,1}; the top facet {4,5,6,7} does not contain it.
  const Index top = 1;
  d.ridges.up[0] = {d.ridges.up[0][0], top};
  std::sort(d.ridges.up[0].begin(), d.ridges.up[0].end());
  const ValidationReport r = validate_poset(FacePoset(d));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().code, Code::VERTEX_CONTAINMENT);
  EXPECT_EQ(r.violations.front().face, (FaceId{1, 0}));
}

TEST(PosetTest, ValidateReportsMissingIncidences) {
  PosetData d = gen_hypercube(3).poset().data();
  d.ridges.up.clear();
  const ValidationReport r = validate_poset(FacePoset(d));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.front().code, Code::MISSING_RANK);
}

TEST(PosetTest, EquationsModeNeedsNoVertexLists) {
  PosetData d = gen_hypercube(4).poset().data();
  d.peaks.vertices.clear();
  d.ridges.vertices.clear();
  d.facets.vertices.clear();
  d.vertex_count = 0;
  EXPECT_TRUE(validate_poset(FacePoset(d), GeometryMode::Equations).ok());
  EXPECT_FALSE(validate_poset(FacePoset(d), GeometryMode::Vertices).ok());
}

TEST(ManifoldTest, OpenBoxIsNotClosed) {
  PosetData d = gen_hypercube(3).poset().data();
  // Drop the top facet (index 1) and renumber.
  d.facets.vertices.erase(d.facets.vertices.begin() + 1);
  d.facets.count = 5;
  for (auto& up : d.ridges.up) {
    std::erase(up, Index{1});
    for (auto& h : up)
      if (h > 1) --h;
  }
  const FacePoset p(d);
  EXPECT_TRUE(validate_poset(p).ok());
  const ValidationReport r = check_closed(p);
  ASSERT_EQ(r.violations.size(), 4u);
  for (const auto& v : r.violations) EXPECT_EQ(v.code, Code::NOT_CLOSED);
}

TEST(ManifoldTest, TwoTetrahedraAreNotConnected) {
  std::vector<RVec> xs = {make_vec({0, 0, 0}), make_vec({1, 0, 0}), make_vec({0, 1, 0}),
                          make_vec({0, 0, 1}), make_vec({5, 0, 0}), make_vec({6, 0, 0}),
                          make_vec({5, 1, 0}), make_vec({5, 0, 1})};
  const PLSurface s = polyhedron_from_cycles(
      xs, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}, {4, 6, 5}, {4, 5, 7}, {4, 7, 6}, {5, 6, 7}});
  EXPECT_TRUE(check_closed(s.poset()).ok());
  const ValidationReport r = check_connected(s.poset());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].code, Code::NOT_CONNECTED);
  EXPECT_EQ(r.violations[0].face, (FaceId{2, 4}));
}

TEST(LinkCycleTest, CubeCornerAlternates) {
  const FacePoset p = gen_hypercube(3).poset();
  for (Index v = 0; v < 8; ++v) {
    const LinkCycle c = link_cycle(p, v);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.ridges.front(), p.up(Rank::Peak, v).front());
    EXPECT_EQ(c.facets.front(), p.up(Rank::Ridge, c.ridges.front()).front());
    for (std::size_t i = 0; i < 3; ++i) {
      auto a = to_vector(p.up(Rank::Ridge, c.ridges[i]));
      auto b = to_vector(p.up(Rank::Ridge, c.ridges[(i + 1) % 3]));
      EXPECT_NE(std::find(a.begin(), a.end(), c.facets[i]), a.end());
      EXPECT_NE(std::find(b.begin(), b.end(), c.facets[i]), b.end());
    }
    const auto entries = c.entries(p);
    ASSERT_EQ(entries.size(), 6u);
    EXPECT_EQ(entries[0].dim, 1);
    EXPECT_EQ(entries[1].dim, 2);
  }
}

TEST(LinkCycleTest, TesseractEdgeStar) {
  const FacePoset p = gen_hypercube(4).poset();
  for (Index e = 0; e < p.count(Rank::Peak); ++e) EXPECT_EQ(link_cycle(p, e).size(), 3u);
}

TEST(LinkCycleTest, PinchedVertexIsNotOneCycle) {
  // Two tetrahedra sharing vertex 0 only.
  std::vector<RVec> xs = {make_vec({0, 0, 0}),  make_vec({1, 0, 0}),  make_vec({0, 1, 0}),
                          make_vec({0, 0, 1}),  make_vec({-1, 0, 0}), make_vec({0, -1, 0}),
                          make_vec({0, 0, -1})};
  const PLSurface s = polyhedron_from_cycles(
      xs, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}, {0, 5, 4}, {0, 4, 6}, {0, 6, 5}, {4, 5, 6}});
  try {
    link_cycle(s.poset(), 0);
    FAIL() << "expected NOT_SINGLE_CYCLE";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Code::NOT_SINGLE_CYCLE);
  }
  EXPECT_EQ(link_cycle(s.poset(), 1).size(), 3u);
}

}  // namespace
}  // namespace plconvex
