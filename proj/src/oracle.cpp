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

#include "plconvex/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace plconvex {

Hyperplane facet_hyperplane(const PLSurface& surface, Index facet) {
  const FaceGeometry& g = surface.geometry(Rank::Facet, facet);
  const std::size_t n = static_cast<std::size_t>(surface.n());
  if (g.interior.empty() || g.affine_dim != surface.n() - 1)
    throw Error(Code::DEGENERATE_FACE,
                to_string(surface.poset().face(Rank::Facet, facet)) + " is not a hyperplane piece");
  const auto& xs = surface.vertices();
  const RVec& base = xs[g.frame.front()];
  std::vector<RVec> diffs;
  for (std::size_t j = 1; j < g.frame.size(); ++j) diffs.push_back(xs[g.frame[j]] - base);
  Hyperplane h{orthogonal_complement(diffs, n).front(), 0};
  h.offset = dot(h.normal, base);
  for (const auto& x : xs) {
    const int s = sgn(dot(h.normal, x) - h.offset);
    if (s == 0) continue;
    if (s > 0) {
      h.normal = Rational(-1) * h.normal;
      h.offset = -h.offset;
    }
    break;
  }
  return h;
}

OracleVerdict oracle_verdict(const PLSurface& surface) {
  if (surface.mode() != GeometryMode::Vertices)
    throw Error(Code::BAD_PARAMETER, "oracle needs vertex coordinates");
  const auto& xs = surface.vertices();
  const std::size_t n = static_cast<std::size_t>(surface.n());
  {
    EchelonBasis span(n);
    for (std::size_t v = 1; v < xs.size() && span.size() < n; ++v) span.insert(xs[v] - xs[0]);
    if (span.size() < n) throw Error(Code::FLAT_SURFACE, "all vertices lie in one hyperplane");
  }

  const FacePoset& poset = surface.poset();
  OracleVerdict out;
  for (Index h = 0; h < poset.count(Rank::Facet); ++h) {
    const Hyperplane plane = facet_hyperplane(surface, h);
    bool strictly_off = false;
    for (Index v = 0; v < xs.size(); ++v) {
      const int s = sgn(dot(plane.normal, xs[v]) - plane.offset);
      strictly_off |= s != 0;
      if (s > 0) {
        out.violating_facet = poset.face(Rank::Facet, h);
        out.violating_vertex = v;
        return out;
      }
    }
    if (!strictly_off) {
      out.violating_facet = poset.face(Rank::Facet, h);
      out.violating_vertex = poset.vertices(Rank::Facet, h).front();
      return out;
    }
  }
  out.convex = true;
  return out;
}

namespace {

bool collinear(const RVec& a, const RVec& b, const RVec& c) { return is_zero(cross(b - a, c - a)); }

// Extreme points of coplanar points, in boundary order.
std::vector<Index> planar_hull(std::span<const RVec> pts, const std::vector<Index>& ids,
                               const RVec& normal) {
  int drop = 0;
  while (sgn(normal[drop]) == 0) ++drop;
  auto flat = [&](Index i) {
    RVec p;
    for (int a = 0; a < 3; ++a)
      if (a != drop) p.push_back(pts[i][a]);
    return p;
  };
  std::vector<std::pair<RVec, Index>> q;
  for (Index i : ids) q.emplace_back(flat(i), i);
  std::sort(q.begin(), q.end());
  std::vector<std::pair<RVec, Index>> h(2 * q.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    while (k >= 2 && orientation2d(h[k - 2].first, h[k - 1].first, q[i].first) <= 0) --k;
    h[k++] = q[i];
  }
  for (std::size_t i = q.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation2d(h[k - 2].first, h[k - 1].first, q[i].first) <= 0) --k;
    h[k++] = q[i];
  }
  std::vector<Index> out;
  for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(h[i].second);
  return out;
}

struct Facet {
  std::vector<Index> ids;
  RVec normal;
};

Facet facet_on(std::span<const RVec> pts, const RVec& a, const RVec& b, const RVec& c) {
  Facet f;
  f.normal = cross(b - a, c - a);
  for (Index i = 0; i < pts.size(); ++i)
    if (sgn(dot(f.normal, pts[i] - a)) == 0) f.ids.push_back(i);
  return f;
}

// Rotates the plane through u, v and w about the line uv until it supports
// the point set from the other side. All points lie in a wedge of angle
// below pi around that line, so one pass keeping the extreme one suffices.
Index pivot(std::span<const RVec> pts, const RVec& u, const RVec& v, const RVec& w) {
  std::optional<Index> best;
  for (Index q = 0; q < pts.size(); ++q) {
    if (collinear(u, v, pts[q]) || orientation3d(u, v, w, pts[q]) == 0) continue;
    if (!best) {
      best = q;
      continue;
    }
    const RVec& c = pts[*best];
    const int sq = orientation3d(u, v, c, pts[q]);
    const int sw = orientation3d(u, v, c, w);
    if (sq != 0 && sq == -sw) best = q;
  }
  if (!best) throw Error(Code::DEGENERATE, "pivot found no point off the plane");
  return *best;
}

}  // namespace

std::vector<std::vector<Index>> hull_facets_3d(std::span<const RVec> pts) {
  if (pts.size() < 4) throw Error(Code::DEGENERATE, "need at least four points");
  {
    EchelonBasis span(3);
    for (std::size_t i = 1; i < pts.size(); ++i) span.insert(pts[i] - pts[0]);
    if (span.size() < 3) throw Error(Code::DEGENERATE, "points are coplanar");
  }

  Index a = 0;
  for (Index i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[a]) a = i;
  const RVec up{0, 0, 1};

  // Vertical supporting plane through the lexicographic minimum: every point
  // has x >= a.x, so the plane at the largest xy-angle around a supports.
  std::optional<Index> b;
  for (Index q = 0; q < pts.size(); ++q) {
    if (pts[q][0] == pts[a][0] && pts[q][1] == pts[a][1]) continue;
    if (!b) {
      b = q;
      continue;
    }
    const RVec db = pts[*b] - pts[a];
    const RVec dq = pts[q] - pts[a];
    if (sgn(db[0] * dq[1] - db[1] * dq[0]) > 0) b = q;
  }
  Facet first = facet_on(pts, pts[a], pts[*b], pts[a] + up);
  bool flat_start = true;
  for (Index i : first.ids)
    if (!collinear(pts[a], pts[*b], pts[i])) flat_start = false;
  if (flat_start) {
    // The vertical plane touches only an edge: find its endpoints and wrap.
    const RVec dir = pts[*b] - pts[a];
    Index lo = first.ids.front(), hi = first.ids.front();
    for (Index i : first.ids) {
      if (dot(dir, pts[i]) < dot(dir, pts[lo])) lo = i;
      if (dot(dir, pts[i]) > dot(dir, pts[hi])) hi = i;
    }
    const RVec w = pts[lo] + up;
    const Index c = pivot(pts, pts[lo], pts[hi], w);
    first = facet_on(pts, pts[lo], pts[hi], pts[c]);
  }

  std::set<std::vector<Index>> seen;
  std::deque<Facet> queue;
  seen.insert(first.ids);
  queue.push_back(std::move(first));
  while (!queue.empty()) {
    Facet f = std::move(queue.front());
    queue.pop_front();
    const std::vector<Index> ring = planar_hull(pts, f.ids, f.normal);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const RVec& u = pts[ring[i]];
      const RVec& v = pts[ring[(i + 1) % ring.size()]];
      const RVec& w = pts[ring[(i + 2) % ring.size()]];
      const Index c = pivot(pts, u, v, w);
      Facet next = facet_on(pts, u, v, pts[c]);
      if (seen.insert(next.ids).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace plconvex
