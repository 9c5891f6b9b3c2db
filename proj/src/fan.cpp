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

#include "plconvex/fan.hpp"

#include <cmath>
#include <cstdlib>

namespace plconvex {

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::OK_POINTED: return "OK_POINTED";
    case Reason::OK_FLAT: return "OK_FLAT";
    case Reason::NO_SUPPORT: return "NO_SUPPORT";
    case Reason::BAD_ROTATION_INDEX: return "BAD_ROTATION_INDEX";
    case Reason::WRONG_TURN_SIGN: return "WRONG_TURN_SIGN";
    case Reason::ZERO_ANGLE_CONE: return "ZERO_ANGLE_CONE";
    case Reason::DEGENERATE_RANK: return "DEGENERATE_RANK";
  }
  return "UNKNOWN";
}

namespace {

CCheckResult ok(Reason r) { return {true, r}; }
CCheckResult fail(Reason r) { return {false, r}; }

Rational cross2(const RVec& a, const RVec& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational dot2(const RVec& a, const RVec& b) { return a[0] * b[0] + a[1] * b[1]; }

bool positive_on_all(const RVec& s, std::span<const RVec> dirs) {
  for (const auto& u : dirs)
    if (sgn(dot(s, u)) <= 0) return false;
  return true;
}

// Sign pattern of c against every direction: +1 if all dots >= 0, -1 if all
// <= 0, 0 if mixed.
int weak_side(const RVec& c, std::span<const RVec> dirs) {
  bool pos = false, neg = false;
  for (const auto& u : dirs) {
    const int sd = sgn(dot(c, u));
    pos |= sd > 0;
    neg |= sd < 0;
    if (pos && neg) return 0;
  }
  return neg ? -1 : 1;
}

std::optional<RVec> heuristic_direction(std::span<const RVec> dirs) {
  double acc[3] = {0, 0, 0};
  for (const auto& u : dirs) {
    const double x = u[0].get_d(), y = u[1].get_d(), z = u[2].get_d();
    const double len = std::sqrt(x * x + y * y + z * z);
    if (!(len > 0) || !std::isfinite(len)) return std::nullopt;
    acc[0] += x / len;
    acc[1] += y / len;
    acc[2] += z / len;
  }
  const double big = std::max({std::abs(acc[0]), std::abs(acc[1]), std::abs(acc[2])});
  if (!(big > 1e-12)) return std::nullopt;
  RVec s(3);
  for (int i = 0; i < 3; ++i) s[i] = static_cast<long>(std::llround(acc[i] / big * 1048576.0));
  if (is_zero(s) || !positive_on_all(s, dirs)) return std::nullopt;
  return s;
}

// Every extreme ray of the dual cone is orthogonal to a boundary ray (rank 2)
// or to a pair of rays spanning a boundary facet (rank 3), so summing all
// weakly valid candidates lands in the open dual cone whenever it is
// nonempty.
std::optional<RVec> exact_direction(std::span<const RVec> dirs) {
  const std::size_t r = rank(dirs);
  if (r == 0) return std::nullopt;
  if (r == 1) {
    if (positive_on_all(dirs.front(), dirs)) return dirs.front();
    return std::nullopt;
  }
  std::vector<RVec> candidates;
  if (r == 2) {
    RVec m;
    for (std::size_t j = 1; j < dirs.size() && m.empty(); ++j) {
      RVec c = cross(dirs[0], dirs[j]);
      if (!is_zero(c)) m = std::move(c);
    }
    for (const auto& u : dirs) candidates.push_back(cross(m, u));
  } else {
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        RVec c = cross(dirs[i], dirs[j]);
        if (!is_zero(c)) candidates.push_back(std::move(c));
      }
  }
  RVec sum = zero_vec(3);
  for (const auto& c : candidates) {
    const int side = weak_side(c, dirs);
    if (side > 0) sum = sum + c;
    if (side < 0) sum = sum - c;
  }
  if (positive_on_all(sum, dirs)) return sum;
  return std::nullopt;
}

// Plane of a rank-2 direction set: drop an axis on which the normal is
// nonzero. The result is injective on that plane.
std::vector<RVec> flatten(std::span<const RVec> dirs) {
  RVec m;
  for (std::size_t j = 1; j < dirs.size() && m.empty(); ++j) {
    RVec c = cross(dirs[0], dirs[j]);
    if (!is_zero(c)) m = std::move(c);
  }
  int drop = 0;
  while (sgn(m[drop]) == 0) ++drop;
  std::vector<RVec> out;
  out.reserve(dirs.size());
  for (const auto& u : dirs) {
    RVec p;
    for (int i = 0; i < 3; ++i)
      if (i != drop) p.push_back(u[i]);
    out.push_back(std::move(p));
  }
  return out;
}

CCheckResult flat_check(std::span<const RVec> dirs) {
  const std::vector<RVec> plane = flatten(dirs);
  const std::size_t k = plane.size();
  for (std::size_t i = 0; i < k; ++i) {
    const RVec& a = plane[i];
    const RVec& b = plane[(i + 1) % k];
    if (sgn(cross2(a, b)) == 0)
      return fail(sgn(dot2(a, b)) > 0 ? Reason::ZERO_ANGLE_CONE : Reason::BAD_ROTATION_INDEX);
  }
  const int turns = rotation_index(plane);
  if (std::abs(turns) != 1) return fail(Reason::BAD_ROTATION_INDEX);
  const int first = sgn(cross2(plane[0], plane[1]));
  for (std::size_t i = 1; i < k; ++i)
    if (sgn(cross2(plane[i], plane[(i + 1) % k])) != first) return fail(Reason::WRONG_TURN_SIGN);
  return ok(Reason::OK_FLAT);
}

// Entries from ray `from` to the antiparallel ray `to` (cyclically) must
// sweep one open half-plane bounded by their common line, monotonically.
bool half_plane_arc(std::span<const RVec> dirs, std::size_t from, std::size_t to) {
  const std::size_t k = dirs.size();
  const RVec& d = dirs[from];
  const RVec& first = dirs[(from + 1) % k];
  const RVec m = cross(d, first);
  if (is_zero(m)) return false;
  for (std::size_t i = (from + 1) % k;; i = (i + 1) % k) {
    const RVec& u = dirs[i];
    const RVec& next = dirs[(i + 1) % k];
    if (i != to) {
      if (sgn(dot(m, u)) != 0) return false;
      if (sgn(dot(cross(d, u), m)) <= 0) return false;
    }
    if (i == to) break;
    if (sgn(dot(cross(u, next), m)) <= 0) return false;
  }
  return sgn(dot(cross(d, first), m)) > 0;
}

// Cone containing exactly one line: two half-plane sheets sharing it.
CCheckResult wedge_check(std::span<const RVec> dirs) {
  const std::size_t k = dirs.size();
  std::size_t a = k, b = k;
  int pairs = 0;
  for (std::size_t i = 0; i < k; i += 2)
    for (std::size_t j = i + 2; j < k; j += 2)
      if (is_zero(cross(dirs[i], dirs[j])) && sgn(dot(dirs[i], dirs[j])) < 0) {
        a = i;
        b = j;
        ++pairs;
      }
  if (pairs != 1) return fail(Reason::NO_SUPPORT);
  if (!half_plane_arc(dirs, a, b) || !half_plane_arc(dirs, b, a)) return fail(Reason::NO_SUPPORT);
  return ok(Reason::OK_FLAT);
}

CCheckResult pointed_check(std::span<const RVec> dirs, const RVec& s) {
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(s[i]) < abs(s[axis])) axis = i;
  RVec e = zero_vec(3);
  e[axis] = 1;
  const RVec b1 = cross(s, e);
  const RVec b2 = cross(s, b1);
  std::vector<RVec> points;
  points.reserve(dirs.size());
  for (const auto& u : dirs) {
    const Rational inv = 1 / dot(u, s);
    points.push_back(RVec{dot(u, b1) * inv, dot(u, b2) * inv});
  }
  return polygon_is_convex(points);
}

// Positive multiple of v with coprime integer coordinates. Every test on fan
// entries is invariant under positive scaling; small integers keep the
// orientation determinants cheap.
RVec primitive(RVec v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, x.get_den());
  for (auto& x : v) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Fan3 build_fan(const PLSurface& surface, const LinkCycle& cycle, const Projection3& projection) {
  const FacePoset& poset = surface.poset();
  const RVec& base = surface.interior_point(Rank::Peak, cycle.center.index);
  Fan3 fan;
  fan.apex = project(projection, base);
  fan.entries.reserve(2 * cycle.size());
  auto push = [&](Rank r, Index i) {
    RVec dir = project(projection, surface.interior_point(r, i) - base);
    const FaceId source = poset.face(r, i);
    if (is_zero(dir))
      throw Error(Code::ZERO_DIRECTION,
                  to_string(source) + " projects onto the apex of " + to_string(cycle.center));
    fan.entries.push_back({primitive(std::move(dir)), source});
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    push(Rank::Ridge, cycle.ridges[i]);
    push(Rank::Facet, cycle.facets[i]);
  }
  return fan;
}

std::optional<RVec> reference_direction(std::span<const RVec> dirs) {
  if (dirs.empty()) return std::nullopt;
  if (auto s = heuristic_direction(dirs)) return s;
  return exact_direction(dirs);
}

int rotation_index(std::span<const RVec> dirs) {
  // Winding number of the closed polygon through the directions around the
  // origin: each segment subtends exactly the turn between its endpoints.
  int winding = 0;
  const std::size_t k = dirs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const RVec& a = dirs[i];
    const RVec& b = dirs[(i + 1) % k];
    const int turn = sgn(cross2(a, b));
    if (turn == 0 && sgn(dot2(a, b)) < 0)
      throw Error(Code::OPPOSITE_DIRECTIONS, "antiparallel consecutive directions");
    if (sgn(a[1]) <= 0 && sgn(b[1]) > 0 && turn > 0) ++winding;
    if (sgn(b[1]) <= 0 && sgn(a[1]) > 0 && turn < 0) --winding;
  }
  return winding;
}

CCheckResult polygon_is_convex(std::span<const RVec> points) {
  const std::size_t k = points.size();
  if (k < 3) return fail(Reason::DEGENERATE_RANK);
  for (std::size_t i = 0; i < k; ++i)
    if (points[i] == points[(i + 1) % k]) return fail(Reason::ZERO_ANGLE_CONE);

  bool pos = false, neg = false;
  for (std::size_t i = 0; i < k; ++i) {
    const int o = orientation2d(points[(i + k - 1) % k], points[i], points[(i + 1) % k]);
    pos |= o > 0;
    neg |= o < 0;
  }
  if (pos && neg) return fail(Reason::WRONG_TURN_SIGN);

  std::vector<RVec> edges;
  edges.reserve(k);
  for (std::size_t i = 0; i < k; ++i) edges.push_back(points[(i + 1) % k] - points[i]);
  try {
    if (std::abs(rotation_index(edges)) != 1) return fail(Reason::BAD_ROTATION_INDEX);
  } catch (const Error&) {
    return fail(Reason::BAD_ROTATION_INDEX);
  }
  return ok(Reason::OK_POINTED);
}

CCheckResult c_check(const Fan3& fan) {
  std::vector<RVec> dirs;
  dirs.reserve(fan.entries.size());
  for (const auto& e : fan.entries) dirs.push_back(e.dir);
  if (dirs.size() < 4) return fail(Reason::DEGENERATE_RANK);

  const std::size_t r = rank(dirs);
  if (r <= 1) return fail(Reason::DEGENERATE_RANK);
  if (r == 2) return flat_check(dirs);
  if (auto s = reference_direction(dirs)) return pointed_check(dirs, *s);
  return wedge_check(dirs);
}

}  // namespace plconvex
