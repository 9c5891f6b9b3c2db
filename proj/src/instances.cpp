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

#include "plconvex/instances.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

namespace plconvex {

namespace {

using Rows = std::vector<std::vector<Index>>;

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Code::BAD_PARAMETER, what);
}

PLSurface from_face_lists(int n, std::vector<RVec> coords, Rows peaks, Rows ridges, Rows facets) {
  PosetData d;
  d.n = n;
  d.vertex_count = coords.size();
  d.peaks.count = peaks.size();
  d.ridges.count = ridges.size();
  d.facets.count = facets.size();
  d.peaks.vertices = std::move(peaks);
  d.ridges.vertices = std::move(ridges);
  d.facets.vertices = std::move(facets);
  derive_incidences(d);
  return PLSurface::from_vertices(FacePoset(d), std::move(coords));
}

// Subsets of {0..n-1} of size k as bitmasks, in lexicographic order of
// their sorted elements.
std::vector<unsigned> combinations(int n, int k) {
  std::vector<unsigned> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n || k < 0) return out;
  while (true) {
    unsigned m = 0;
    for (int i : idx) m |= 1u << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Rows cube_faces(int n, int dim) {
  Rows out;
  const unsigned all = (1u << n) - 1;
  for (unsigned free : combinations(n, dim)) {
    const unsigned fixed = all & ~free;
    // Enumerate assignments on the fixed coordinates in increasing order.
    for (unsigned v = 0;; v = (v - fixed) & fixed) {
      std::vector<Index> face;
      for (unsigned x = 0; x <= all; ++x)
        if ((x & fixed) == v) face.push_back(x);
      out.push_back(std::move(face));
      if (v == fixed) break;
    }
  }
  return out;
}

Rows cross_faces(int n, int dim) {
  Rows out;
  for (unsigned support : combinations(n, dim + 1))
    for (unsigned signs = 0; signs < (1u << (dim + 1)); ++signs) {
      std::vector<Index> face;
      int j = 0;
      for (int i = 0; i < n; ++i)
        if (support >> i & 1u) face.push_back(2 * i + (signs >> j++ & 1u));
      out.push_back(std::move(face));
    }
  return out;
}

Rows simplex_faces(int n, int dim) {
  Rows out;
  for (unsigned s : combinations(n + 1, dim + 1)) {
    std::vector<Index> face;
    for (int i = 0; i <= n; ++i)
      if (s >> i & 1u) face.push_back(i);
    out.push_back(std::move(face));
  }
  return out;
}

RVec unit_cube_vertex(unsigned x) {
  return RVec{Rational(x & 1u), Rational(x >> 1 & 1u), Rational(x >> 2 & 1u)};
}

// Boundary cycles of the six cube facets, in hypercube facet order.
Rows cube_cycles() {
  Rows out;
  for (unsigned free : combinations(3, 2)) {
    const unsigned a = free & (~free + 1);
    const unsigned b = free & ~a;
    const unsigned fixed = 7u & ~free;
    for (unsigned base : {0u, fixed}) out.push_back({base, base | a, base | a | b, base | b});
  }
  return out;
}

PLSurface with_coords(const PLSurface& s, std::vector<RVec> coords) {
  if (s.mode() != GeometryMode::Vertices)
    throw Error(Code::BAD_PARAMETER, "vertex-mode surface required");
  return PLSurface::from_vertices(s.poset(), std::move(coords));
}

Rows permute_rows(const Rows& rows, const std::vector<Index>& row_perm,
                  const std::vector<Index>* value_perm) {
  Rows out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& dst = out[row_perm[i]];
    for (Index v : rows[i]) dst.push_back(value_perm ? (*value_perm)[v] : v);
    std::sort(dst.begin(), dst.end());
  }
  return out;
}

std::vector<Index> shuffled(std::size_t count, std::mt19937_64& rng) {
  std::vector<Index> p(count);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

PLSurface gen_hypercube(int n) {
  require(n >= 3 && n <= 16, "hypercube needs 3 <= n <= 16");
  std::vector<RVec> coords;
  for (unsigned x = 0; x < (1u << n); ++x) {
    RVec v(n);
    for (int j = 0; j < n; ++j) v[j] = (x >> j) & 1u;
    coords.push_back(std::move(v));
  }
  return from_face_lists(n, std::move(coords), cube_faces(n, n - 3), cube_faces(n, n - 2),
                         cube_faces(n, n - 1));
}

PLSurface gen_cross_polytope(int n) {
  require(n >= 3 && n <= 16, "cross-polytope needs 3 <= n <= 16");
  std::vector<RVec> coords;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      RVec v = zero_vec(n);
      v[i] = s;
      coords.push_back(std::move(v));
    }
  return from_face_lists(n, std::move(coords), cross_faces(n, n - 3), cross_faces(n, n - 2),
                         cross_faces(n, n - 1));
}

PLSurface gen_simplex(int n) {
  require(n >= 3 && n <= 24, "simplex needs 3 <= n <= 24");
  std::vector<RVec> coords(n + 1, zero_vec(n));
  for (int i = 1; i <= n; ++i) coords[i][i - 1] = 1;
  return from_face_lists(n, std::move(coords), simplex_faces(n, n - 3), simplex_faces(n, n - 2),
                         simplex_faces(n, n - 1));
}

PLSurface gen_prism(int m) {
  require(m >= 3, "prism needs m >= 3");
  // Points of the rational circle parametrization, t strictly increasing so
  // the angles 2 atan(t) are strictly increasing in (-pi, pi).
  const long grid = 8L * m;
  std::vector<RVec> coords(2 * static_cast<std::size_t>(m));
  long prev = 0;
  for (int i = 0; i < m; ++i) {
    const double theta = -std::numbers::pi + 2 * std::numbers::pi * (i + 0.5) / m;
    long k = std::lround(std::tan(theta / 2) * static_cast<double>(grid));
    if (i > 0 && k <= prev) k = prev + 1;
    prev = k;
    const Rational t = frac(k, grid);
    const Rational q = 1 + t * t;
    const Rational x = (1 - t * t) / q, y = 2 * t / q;
    coords[i] = {x, y, 0};
    coords[m + i] = {x, y, 1};
  }

  PosetData d;
  d.n = 3;
  d.vertex_count = coords.size();
  d.peaks.count = coords.size();
  const Index mm = static_cast<Index>(m);
  auto next = [&](Index i) { return (i + 1) % mm; };
  // Edges: bottom ring, top ring, verticals. Facets: caps, then sides.
  for (Index i = 0; i < mm; ++i) d.ridges.vertices.push_back({i, next(i)});
  for (Index i = 0; i < mm; ++i) d.ridges.vertices.push_back({mm + i, mm + next(i)});
  for (Index i = 0; i < mm; ++i) d.ridges.vertices.push_back({i, mm + i});
  std::vector<Index> bottom(mm), top(mm);
  std::iota(bottom.begin(), bottom.end(), 0);
  std::iota(top.begin(), top.end(), mm);
  d.facets.vertices.push_back(bottom);
  d.facets.vertices.push_back(top);
  for (Index i = 0; i < mm; ++i) d.facets.vertices.push_back({i, next(i), mm + i, mm + next(i)});
  d.ridges.count = d.ridges.vertices.size();
  d.facets.count = d.facets.vertices.size();

  // Incidences are known by construction; deriving them by containment
  // would scan the caps once per rim edge.
  d.peaks.up.resize(coords.size());
  for (Index i = 0; i < mm; ++i) {
    d.peaks.up[i] = {i, (i + mm - 1) % mm, 2 * mm + i};
    d.peaks.up[mm + i] = {mm + i, mm + (i + mm - 1) % mm, 2 * mm + i};
  }
  d.ridges.up.resize(d.ridges.count);
  for (Index i = 0; i < mm; ++i) {
    d.ridges.up[i] = {0, 2 + i};
    d.ridges.up[mm + i] = {1, 2 + i};
    d.ridges.up[2 * mm + i] = {2 + (i + mm - 1) % mm, 2 + i};
  }
  derive_incidences(d);
  return PLSurface::from_vertices(FacePoset(d), std::move(coords));
}

PLSurface polyhedron_from_cycles(std::vector<RVec> coords, const Rows& cycles) {
  std::map<std::pair<Index, Index>, Index> edge_id;
  Rows edges, edge_up;
  Rows facets;
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    const auto& c = cycles[f];
    if (c.size() < 3)
      throw Error(Code::PARSE_ERROR, "facet " + std::to_string(f) + " has fewer than 3 vertices");
    std::vector<Index> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Code::PARSE_ERROR, "facet " + std::to_string(f) + " repeats a vertex");
    for (Index v : c)
      if (v >= coords.size())
        throw Error(Code::PARSE_ERROR,
                    "facet " + std::to_string(f) + " references vertex " + std::to_string(v));
    facets.push_back(sorted);
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto key = std::minmax(c[j], c[(j + 1) % c.size()]);
      auto [it, fresh] = edge_id.try_emplace({key.first, key.second}, edges.size());
      if (fresh) {
        edges.push_back({key.first, key.second});
        edge_up.emplace_back();
      }
      edge_up[it->second].push_back(static_cast<Index>(f));
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edge_up[e].size() != 2)
      throw Error(Code::NON_MANIFOLD, "edge {" + std::to_string(edges[e][0]) + "," +
                                          std::to_string(edges[e][1]) + "} lies in " +
                                          std::to_string(edge_up[e].size()) + " facets");
  PosetData d;
  d.n = 3;
  d.vertex_count = coords.size();
  d.peaks.count = coords.size();
  d.ridges.count = edges.size();
  d.facets.count = facets.size();
  d.ridges.vertices = std::move(edges);
  d.ridges.up = std::move(edge_up);
  d.facets.vertices = std::move(facets);
  derive_incidences(d);
  return PLSurface::from_vertices(FacePoset(d), std::move(coords));
}

PLSurface gen_schonhardt() {
  const Rational c(4, 5), s(3, 5);
  const std::vector<RVec> base = {{1, 0}, {Rational(-1, 2), Rational(7, 8)},
                                  {Rational(-1, 2), Rational(-7, 8)}};
  std::vector<RVec> coords;
  for (const auto& p : base) coords.push_back({p[0], p[1], 0});
  for (const auto& p : base) coords.push_back({c * p[0] - s * p[1], s * p[0] + c * p[1], 1});
  const Rows cycles = {{0, 1, 2}, {3, 4, 5}, {0, 1, 4}, {0, 4, 3},
                       {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}};
  return polyhedron_from_cycles(std::move(coords), cycles);
}

PLSurface gen_dented_cube(int k) {
  require(k >= 0 && k <= 6, "dented cube needs 0 <= k <= 6");
  std::vector<RVec> coords;
  for (unsigned x = 0; x < 8; ++x) coords.push_back(unit_cube_vertex(x));
  const RVec center{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  Rows cycles;
  const Rows faces = cube_cycles();
  for (int f = 0; f < 6; ++f) {
    const auto& c = faces[f];
    if (f >= k) {
      cycles.push_back(c);
      continue;
    }
    RVec mid = zero_vec(3);
    for (Index v : c) mid = mid + coords[v];
    mid = Rational(1, 4) * mid;
    // The facet center is 1/2 from the cube center; move half of that.
    const Index apex = static_cast<Index>(coords.size());
    coords.push_back(mid + Rational(1, 2) * (center - mid));
    for (std::size_t j = 0; j < 4; ++j) cycles.push_back({c[j], c[(j + 1) % 4], apex});
  }
  return polyhedron_from_cycles(std::move(coords), cycles);
}

PLSurface gen_split_cube() {
  std::vector<RVec> coords;
  for (unsigned x = 0; x < 8; ++x) coords.push_back(unit_cube_vertex(x));
  coords.push_back({Rational(1, 2), 0, 1});
  coords.push_back({Rational(1, 2), 1, 1});
  // Top is z = 1 (vertices 4..7); y = 0 and y = 1 sides gain a midpoint.
  const Rows cycles = {{0, 1, 3, 2}, {4, 8, 9, 6}, {8, 5, 7, 9}, {0, 1, 5, 8, 4},
                       {2, 3, 7, 9, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
  return polyhedron_from_cycles(std::move(coords), cycles);
}

PLSurface dent(const PLSurface& surface, Index vertex, const Rational& t) {
  require(sgn(t) >= 0, "dent needs t >= 0");
  std::vector<RVec> coords = surface.vertices();
  require(vertex < coords.size(), "dent vertex out of range");
  RVec c = zero_vec(static_cast<std::size_t>(surface.n()));
  for (const auto& v : coords) c = c + v;
  c = frac(1, static_cast<long>(coords.size())) * c;
  coords[vertex] = coords[vertex] - t * (coords[vertex] - c);
  return with_coords(surface, std::move(coords));
}

Rational determinant(std::vector<RVec> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

PLSurface affine_map(const PLSurface& surface, const std::vector<RVec>& a, const RVec& b) {
  const std::size_t n = static_cast<std::size_t>(surface.n());
  require(a.size() == n && b.size() == n, "affine map has wrong shape");
  for (const auto& row : a) require(row.size() == n, "affine map has wrong shape");
  require(sgn(determinant(a)) > 0, "affine map must have positive determinant");
  std::vector<RVec> coords;
  coords.reserve(surface.vertices().size());
  for (const auto& v : surface.vertices()) {
    RVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = dot(a[i], v) + b[i];
    coords.push_back(std::move(w));
  }
  return with_coords(surface, std::move(coords));
}

PLSurface rigid_motion(const PLSurface& surface, std::uint64_t seed) {
  if (seed == 0) return with_coords(surface, surface.vertices());
  const int n = surface.n();
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<RVec> m(n, zero_vec(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto left_multiply = [&](const std::vector<RVec>& g) {
    std::vector<RVec> out(n, zero_vec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[i][j] += g[i][k] * m[k][j];
    m = std::move(out);
  };
  for (int round = 0; round < 3; ++round) {
    int a = pick(0, n - 1), b = pick(0, n - 2);
    if (b >= a) ++b;
    const int p = pick(1, 6), q = pick(1, 6);
    const Rational den = p * p + q * q;
    std::vector<RVec> g(n, zero_vec(n));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    g[a][a] = g[b][b] = Rational(p * p - q * q) / den;
    g[b][a] = Rational(2 * p * q) / den;
    g[a][b] = -g[b][a];
    left_multiply(g);
    std::vector<RVec> h(n, zero_vec(n));
    for (int i = 0; i < n; ++i) h[i][i] = 1;
    h[b][a] = frac(pick(-4, 4), 5);
    left_multiply(h);
  }
  RVec t(n);
  for (auto& x : t) x = frac(pick(-10, 10), 7);
  return affine_map(surface, m, t);
}

AffineMap random_affine(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  AffineMap out;
  while (true) {
    out.a.assign(n, zero_vec(n));
    for (auto& row : out.a)
      for (auto& x : row) x = pick(-3, 3);
    const int s = sgn(determinant(out.a));
    if (s == 0) continue;
    if (s < 0) out.a[0] = Rational(-1) * out.a[0];
    break;
  }
  out.b.resize(n);
  for (auto& x : out.b) x = frac(pick(-20, 20), pick(1, 9));
  return out;
}

PLSurface scale(const PLSurface& surface, const Rational& factor) {
  require(sgn(factor) > 0, "scale factor must be positive");
  std::vector<RVec> coords;
  for (const auto& v : surface.vertices()) coords.push_back(factor * v);
  return with_coords(surface, std::move(coords));
}

PLSurface relabel_faces(const PLSurface& surface, std::uint64_t seed) {
  if (surface.mode() != GeometryMode::Vertices)
    throw Error(Code::BAD_PARAMETER, "vertex-mode surface required");
  std::mt19937_64 rng(seed);
  const PosetData src = surface.poset().data();
  const std::vector<Index> pv = shuffled(src.vertex_count, rng);
  const std::vector<Index> pp = src.n == 3 ? pv : shuffled(src.peaks.count, rng);
  const std::vector<Index> pr = shuffled(src.ridges.count, rng);
  const std::vector<Index> pf = shuffled(src.facets.count, rng);

  PosetData d;
  d.n = src.n;
  d.vertex_count = src.vertex_count;
  d.peaks.count = src.peaks.count;
  d.ridges.count = src.ridges.count;
  d.facets.count = src.facets.count;
  d.peaks.vertices = permute_rows(src.peaks.vertices, pp, &pv);
  d.ridges.vertices = permute_rows(src.ridges.vertices, pr, &pv);
  d.facets.vertices = permute_rows(src.facets.vertices, pf, &pv);
  d.peaks.up = permute_rows(src.peaks.up, pp, &pr);
  d.ridges.up = permute_rows(src.ridges.up, pr, &pf);

  std::vector<RVec> coords(src.vertex_count);
  for (std::size_t v = 0; v < coords.size(); ++v) coords[pv[v]] = surface.vertices()[v];
  return PLSurface::from_vertices(FacePoset(d), std::move(coords));
}

PLSurface to_equations_mode(const PLSurface& surface) {
  if (surface.mode() != GeometryMode::Vertices)
    throw Error(Code::BAD_PARAMETER, "vertex-mode surface required");
  const FacePoset& poset = surface.poset();
  const std::size_t n = static_cast<std::size_t>(surface.n());
  std::vector<Hyperplane> eqs;
  for (Index h = 0; h < poset.count(Rank::Facet); ++h) {
    const FaceGeometry& g = surface.geometry(Rank::Facet, h);
    if (g.affine_dim != surface.n() - 1)
      throw Error(Code::DEGENERATE_FACE, to_string(poset.face(Rank::Facet, h)) + " is not flat");
    const RVec& base = surface.vertices()[g.frame.front()];
    std::vector<RVec> diffs;
    for (std::size_t j = 1; j < g.frame.size(); ++j)
      diffs.push_back(surface.vertices()[g.frame[j]] - base);
    Hyperplane e{orthogonal_complement(diffs, n).front(), 0};
    e.offset = dot(e.normal, base);
    eqs.push_back(std::move(e));
  }
  std::array<std::vector<RVec>, 3> witnesses;
  for (Rank r : {Rank::Peak, Rank::Ridge, Rank::Facet})
    for (Index i = 0; i < poset.count(r); ++i)
      witnesses[static_cast<int>(r)].push_back(surface.interior_point(r, i));

  PosetData d = poset.data();
  d.peaks.vertices.clear();
  d.ridges.vertices.clear();
  d.facets.vertices.clear();
  if (d.n != 3) d.vertex_count = 0;
  return PLSurface::from_equations(FacePoset(d), std::move(eqs), std::move(witnesses));
}

PLSurface generate(const GenSpec& spec) {
  PLSurface s;
  const std::string& f = spec.family;
  if (f == "hypercube")
    s = gen_hypercube(spec.size);
  else if (f == "cross-polytope")
    s = gen_cross_polytope(spec.size);
  else if (f == "simplex")
    s = gen_simplex(spec.size);
  else if (f == "prism")
    s = gen_prism(spec.size);
  else if (f == "schonhardt")
    s = gen_schonhardt();
  else if (f == "dented-cube")
    s = gen_dented_cube(spec.size);
  else if (f == "split-cube")
    s = gen_split_cube();
  else
    throw Error(Code::BAD_PARAMETER, "unknown family '" + f + "'");
  if (spec.dent_vertex) s = dent(s, *spec.dent_vertex, spec.dent_t);
  if (spec.seed != 0) s = rigid_motion(s, spec.seed);
  return s;
}

}  // namespace plconvex
