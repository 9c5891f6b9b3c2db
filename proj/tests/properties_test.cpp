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
#include "plconvex/io.hpp"
#include "plconvex/oracle.hpp"
#include "plconvex/verifier.hpp"
#include "support.hpp"

namespace plconvex {
namespace {

bool convex(const Verdict& v) { return v.kind == VerdictKind::Convex; }

// Random invertible 3x3 integer matrix composed with the coordinate route.
Projection3 scrambled(const Projection3& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<RVec> m;
  do {
    m.assign(3, zero_vec(3));
    for (auto& row : m)
      for (auto& x : row) x = c(rng);
  } while (sgn(determinant(m)) == 0);
  Projection3 q;
  q.kernel = p.kernel;
  for (int i = 0; i < 3; ++i) {
    q.rows[i] = zero_vec(p.ambient_dim());
    for (int k = 0; k < 3; ++k) q.rows[i] = q.rows[i] + m[i][k] * p.rows[k];
  }
  return q;
}

TEST(PropertyTest, StackedSpheresMatchTheOracle) {
  std::mt19937_64 rng(2026);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const PLSurface s = testing::random_stacked(rng, 1 + trial % 15);
    const Verdict v = verify(s);
    if (v.kind == VerdictKind::Invalid) continue;
    const bool o = oracle_verdict(s).convex;
    ASSERT_EQ(convex(v), o) << "trial " << trial << "\n" << emit_pls(s);
    (o ? yes : no)++;
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 100);
}

TEST(PropertyTest, LocalFailuresMatchStarOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const PLSurface s = testing::random_stacked(rng, 2 + trial % 10);
    VerifyOptions all;
    all.collect_all = true;
    const Verdict v = verify(s, all);
    if (v.kind == VerdictKind::Invalid) continue;
    std::vector<Index> failing;
    for (const auto& f : v.failures) failing.push_back(f.face.index);
    EXPECT_EQ(failing, testing::unsupported_vertices(s)) << "trial " << trial;
  }
}

TEST(PropertyTest, ParallelEqualsSerialOnRandomInputs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const PLSurface s = testing::random_stacked(rng, 5 + trial % 20);
    VerifyOptions par;
    par.parallel = true;
    par.threads = 1 + trial % 4;
    const Verdict a = verify(s);
    const Verdict b = verify(s, par);
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.reason, b.reason);
  }
}

TEST(PropertyTest, ProjectionIndependence) {
  std::mt19937_64 rng(13);
  for (const PLSurface& s : {gen_hypercube(4), gen_cross_polytope(4), gen_simplex(5),
                             dent(gen_cross_polytope(4), 0, Rational(3, 2)), gen_schonhardt()})
    for (Index f = 0; f < s.poset().count(Rank::Peak); ++f) {
      const Projection3 p0 = complementary_projection(direction_space(s, f),
                                                      static_cast<std::size_t>(s.n()));
      const FaceCheck base = verify_face(s, f);
      for (int k = 0; k < 5; ++k) {
        const Projection3 q = scrambled(p0, rng);
        ASSERT_TRUE(is_complementary(q));
        const FaceCheck c = verify_face(s, f, q);
        EXPECT_EQ(c.status, base.status);
      }
    }
}

TEST(PropertyTest, VerdictInvariance) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const PLSurface s = testing::random_stacked(rng, 3 + trial % 8);
    const Verdict v = verify(s);
    if (v.kind == VerdictKind::Invalid) continue;
    const AffineMap m = random_affine(3, rng());
    EXPECT_EQ(verify(relabel_faces(s, rng())).kind, v.kind);
    EXPECT_EQ(verify(affine_map(s, m.a, m.b)).kind, v.kind);
    EXPECT_EQ(verify(scale(s, Rational(7, 3))).kind, v.kind);
  }
}

TEST(PropertyTest, EntryCountIsTwiceTheIncidences) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const PLSurface s = testing::random_stacked(rng, trial);
    VerifyOptions all;
    all.collect_all = true;
    const Verdict v = verify(s, all);
    if (v.kind == VerdictKind::Invalid) continue;
    EXPECT_EQ(v.stats.entry_evaluations, 2 * s.poset().peak_ridge_incidences());
  }
}

TEST(PropertyTest, PlsRoundTripOnRandomInputs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const PLSurface s = rigid_motion(testing::random_stacked(rng, trial), rng());
    const std::string text = emit_pls(s);
    EXPECT_EQ(emit_pls(parse_pls(text)), text);
  }
}

}  // namespace
}  // namespace plconvex
