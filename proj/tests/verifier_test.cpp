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

#include <random>

#include "plconvex/instances.hpp"
#include "plconvex/verifier.hpp"
#include "support.hpp"

namespace plconvex {
namespace {

std::vector<PLSurface> convex_family() {
  std::vector<PLSurface> out;
  for (int n = 3; n <= 6; ++n) out.push_back(gen_hypercube(n));
  for (int n = 3; n <= 5; ++n) out.push_back(gen_cross_polytope(n));
  for (int n = 3; n <= 6; ++n) out.push_back(gen_simplex(n));
  for (int m : {3, 4, 7, 20}) out.push_back(gen_prism(m));
  out.push_back(gen_split_cube());
  return out;
}

std::vector<Index> failing_indices(const Verdict& v) {
  std::vector<Index> out;
  for (const auto& f : v.failures) out.push_back(f.face.index);
  return out;
}

TEST(VerifyTest, ConvexFamilies) {
  for (const PLSurface& s : convex_family()) {
    const Verdict v = verify(s);
    EXPECT_EQ(v.kind, VerdictKind::Convex) << v.reason;
    EXPECT_FALSE(v.witness);
    EXPECT_EQ(v.stats.faces_checked, s.poset().count(Rank::Peak));
    EXPECT_EQ(v.stats.entry_evaluations, 2 * s.poset().peak_ridge_incidences());
  }
}

TEST(VerifyTest, SchonhardtFailsAtEveryReflexEdgeEndpoint) {
  const PLSurface s = gen_schonhardt();
  VerifyOptions all;
  all.collect_all = true;
  const Verdict v = verify(s, all);
  ASSERT_EQ(v.kind, VerdictKind::NotConvex);
  EXPECT_EQ(v.witness, (FaceId{0, 0}));
  EXPECT_EQ(v.reason, "WRONG_TURN_SIGN");
  // Reflex edges {0,4}, {1,5}, {2,3} touch all six vertices.
  EXPECT_EQ(failing_indices(v), testing::unsupported_vertices(s));
  EXPECT_EQ(failing_indices(v), (std::vector<Index>{0, 1, 2, 3, 4, 5}));
}

TEST(VerifyTest, SerialStopsAtFirstFailure) {
  const Verdict v = verify(gen_schonhardt());
  EXPECT_EQ(v.failures.size(), 1u);
  EXPECT_EQ(v.stats.faces_checked, 1u);
}

TEST(VerifyTest, DentedCubeWitnessTouchesTheApex) {
  for (int k = 1; k <= 6; ++k) {
    const PLSurface s = gen_dented_cube(k);
    VerifyOptions all;
    all.collect_all = true;
    const Verdict v = verify(s, all);
    ASSERT_EQ(v.kind, VerdictKind::NotConvex);
    EXPECT_EQ(failing_indices(v), testing::unsupported_vertices(s));
    // The apex of the first dent is vertex 8; the witness shares an edge with it.
    const FacePoset& p = s.poset();
    bool adjacent = false;
    for (Index g : p.up(Rank::Peak, v.witness->index)) {
      auto ev = p.vertices(Rank::Ridge, g);
      adjacent |= std::find(ev.begin(), ev.end(), Index{8}) != ev.end();
    }
    EXPECT_TRUE(adjacent) << "k=" << k;
    // Apex stars are convex cones.
    for (Index apex = 8; apex < 8 + static_cast<Index>(k); ++apex)
      EXPECT_EQ(verify_face(s, apex).status, FaceStatus::Convex);
  }
}

TEST(VerifyTest, SplitFacetIsAccepted) {
  const PLSurface s = gen_split_cube();
  EXPECT_EQ(verify(s).kind, VerdictKind::Convex);
  // The midpoints sit on straight edges of the cube.
  EXPECT_EQ(verify_face(s, 8).reason, "OK_FLAT");
  EXPECT_EQ(verify_face(s, 9).reason, "OK_FLAT");
  EXPECT_EQ(verify_face(s, 0).reason, "OK_POINTED");
}

TEST(VerifyTest, PreflightFailuresAreInvalid) {
  const Verdict bent = verify(dent(gen_hypercube(3), 0, Rational(1, 4)));
  EXPECT_EQ(bent.kind, VerdictKind::Invalid);
  EXPECT_EQ(bent.reason, "DEGENERATE_FACE");
  EXPECT_EQ(bent.stats.faces_checked, 0u);

  PosetData d = gen_hypercube(3).poset().data();
  d.facets.vertices.pop_back();
  d.facets.count = 5;
  for (auto& up : d.ridges.up) std::erase(up, Index{5});
  const Verdict open = verify(PLSurface::from_vertices(FacePoset(d), gen_hypercube(3).vertices()));
  EXPECT_EQ(open.kind, VerdictKind::Invalid);
  EXPECT_EQ(open.reason, "NOT_CLOSED");
}

TEST(VerifyTest, SimplicialDentsStayConvex) {
  // Pulling a vertex of a simplex or cross-polytope toward the centroid by
  // less than the full distance keeps the hull combinatorics.
  EXPECT_EQ(verify(dent(gen_simplex(4), 0, Rational(1, 2))).kind, VerdictKind::Convex);
  EXPECT_EQ(verify(dent(gen_cross_polytope(4), 3, Rational(1, 4))).kind, VerdictKind::Convex);
  EXPECT_EQ(verify(dent(gen_cross_polytope(3), 0, Rational(3, 2))).kind, VerdictKind::NotConvex);
  const Verdict v = verify(dent(gen_cross_polytope(5), 0, Rational(3, 2)));
  EXPECT_EQ(v.kind, VerdictKind::NotConvex);
}

TEST(VerifyTest, ParallelMatchesSerial) {
  std::vector<PLSurface> cases = convex_family();
  cases.push_back(gen_schonhardt());
  cases.push_back(gen_dented_cube(3));
  cases.push_back(dent(gen_cross_polytope(4), 2, Rational(3, 2)));
  for (const PLSurface& s : cases)
    for (bool all : {false, true})
      for (int threads : {1, 2, 4}) {
        VerifyOptions serial, parallel;
        serial.collect_all = parallel.collect_all = all;
        parallel.parallel = true;
        parallel.threads = threads;
        const Verdict a = verify(s, serial);
        const Verdict b = verify(s, parallel);
        EXPECT_EQ(a.kind, b.kind);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.reason, b.reason);
        if (all) {
          EXPECT_EQ(failing_indices(a), failing_indices(b));
          EXPECT_EQ(a.stats.entry_evaluations, b.stats.entry_evaluations);
        }
      }
}

TEST(VerifyTest, EquationsModeAgrees) {
  std::vector<PLSurface> cases = convex_family();
  cases.pop_back();  // split cube, see below
  cases.push_back(gen_schonhardt());
  cases.push_back(gen_dented_cube(2));
  cases.push_back(dent(gen_cross_polytope(4), 0, Rational(3, 2)));
  for (const PLSurface& s : cases) {
    VerifyOptions all;
    all.collect_all = true;
    const Verdict a = verify(s, all);
    const Verdict b = verify(to_equations_mode(s), all);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(failing_indices(a), failing_indices(b));
  }
}

// Coplanar facets share one hyperplane, so equations alone cannot pin down
// the edge between them or its endpoints.
TEST(VerifyTest, EquationsModeRejectsCoplanarNeighbours) {
  const Verdict v = verify(to_equations_mode(gen_split_cube()));
  EXPECT_EQ(v.kind, VerdictKind::Invalid);
  EXPECT_EQ(v.reason, "DEGENERATE_FACE");
  EXPECT_EQ(v.witness, (FaceId{0, 8}));
}

TEST(VerifyTest, WitnessOffFacetIsInvalid) {
  const PLSurface s = to_equations_mode(gen_hypercube(4));
  std::array<std::vector<RVec>, 3> w = {s.witnesses(Rank::Peak), s.witnesses(Rank::Ridge),
                                        s.witnesses(Rank::Facet)};
  // Ridge 5 fixes coordinates 1 and 3.
  w[1][5][1] += Rational(1, 7);
  const PLSurface bad = PLSurface::from_equations(s.poset(), s.equations(), w);
  const Verdict v = verify(bad);
  EXPECT_EQ(v.kind, VerdictKind::Invalid);
  EXPECT_EQ(v.reason, "WITNESS_OFF_FACET");
  EXPECT_EQ(v.witness, (FaceId{2, 5}));
}

TEST(VerifyFaceTest, RoutesAgree) {
  for (const PLSurface& s : {gen_hypercube(4), gen_cross_polytope(5), gen_simplex(6),
                             dent(gen_cross_polytope(4), 1, Rational(3, 2))})
    for (Index f = 0; f < s.poset().count(Rank::Peak); ++f) {
      const FaceCheck a = verify_face(s, f, ProjectionRoute::CoordinateFirst);
      const FaceCheck b = verify_face(s, f, ProjectionRoute::OrthogonalComplement);
      EXPECT_EQ(a.status, b.status);
      EXPECT_EQ(a.entries, b.entries);
    }
}

TEST(VerifyFaceTest, FanEntriesAlternateAroundThePeak) {
  const PLSurface s = gen_hypercube(4);
  const LinkCycle c = link_cycle(s.poset(), 0);
  const Projection3 p = complementary_projection(direction_space(s, 0), 4);
  const Fan3 fan = build_fan(s, c, p);
  ASSERT_EQ(fan.entries.size(), 6u);
  for (std::size_t i = 0; i < fan.entries.size(); ++i)
    EXPECT_EQ(fan.entries[i].source.dim, i % 2 == 0 ? 2 : 3);
  EXPECT_EQ(c_check(fan).reason, Reason::OK_POINTED);
}

}  // namespace
}  // namespace plconvex
