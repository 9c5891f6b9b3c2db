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

#include "plconvex/surface.hpp"

#include <algorithm>
#include <utility>

namespace plconvex {

namespace {

constexpr Rank kRanks[3] = {Rank::Peak, Rank::Ridge, Rank::Facet};

bool satisfies(const Hyperplane& h, const RVec& p) {
  return h.normal.size() == p.size() && dot(h.normal, p) == h.offset;
}

}  // namespace

PLSurface PLSurface::from_vertices(FacePoset poset, std::vector<RVec> coords) {
  PLSurface s;
  s.poset_ = std::move(poset);
  s.mode_ = GeometryMode::Vertices;
  s.coords_ = std::move(coords);
  s.prepare();
  return s;
}

PLSurface PLSurface::from_equations(FacePoset poset, std::vector<Hyperplane> facets,
                                    std::array<std::vector<RVec>, 3> witnesses) {
  PLSurface s;
  s.poset_ = std::move(poset);
  s.mode_ = GeometryMode::Equations;
  s.equations_ = std::move(facets);
  s.witnesses_ = std::move(witnesses);
  s.prepare();
  return s;
}

void PLSurface::prepare() {
  const std::size_t n = static_cast<std::size_t>(std::max(poset_.n(), 0));
  for (Rank r : kRanks) {
    auto& out = geometry_[static_cast<int>(r)];
    out.assign(poset_.count(r), FaceGeometry{});
    if (mode_ == GeometryMode::Equations) {
      const auto& w = witnesses_[static_cast<int>(r)];
      for (std::size_t i = 0; i < out.size() && i < w.size(); ++i)
        if (w[i].size() == n) out[i].interior = w[i];
      continue;
    }
    if (!poset_.has_vertex_lists(r)) continue;
    for (Index i = 0; i < out.size(); ++i) {
      auto vs = poset_.vertices(r, i);
      const bool usable = !vs.empty() && std::all_of(vs.begin(), vs.end(), [&](Index v) {
        return v < coords_.size() && coords_[v].size() == n;
      });
      if (!usable) continue;
      FaceGeometry& g = out[i];
      const RVec& base = coords_[vs.front()];
      EchelonBasis hull(n);
      g.frame.push_back(vs.front());
      for (std::size_t j = 1; j < vs.size(); ++j)
        if (hull.insert(coords_[vs[j]] - base)) g.frame.push_back(vs[j]);
      g.affine_dim = static_cast<int>(hull.size());
      RVec sum = base;
      for (std::size_t j = 1; j < g.frame.size(); ++j) sum = sum + coords_[g.frame[j]];
      g.interior = (Rational(1) / static_cast<unsigned long>(g.frame.size())) * sum;
    }
  }
}

std::vector<Index> star_facets(const FacePoset& poset, Index peak) {
  std::vector<Index> facets;
  for (Index g : poset.up(Rank::Peak, peak))
    for (Index h : poset.up(Rank::Ridge, g)) facets.push_back(h);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

ValidationReport check_realization(const PLSurface& surface) {
  ValidationReport report;
  const FacePoset& poset = surface.poset();
  const std::size_t n = static_cast<std::size_t>(surface.n());

  if (surface.mode() == GeometryMode::Vertices) {
    if (surface.vertices().size() != poset.vertex_count())
      report.add(Code::MISSING_GEOMETRY, std::nullopt, "vertex coordinate count mismatch");
    for (Index v = 0; v < surface.vertices().size(); ++v)
      if (surface.vertices()[v].size() != n)
        report.add(Code::MISSING_GEOMETRY, FaceId{0, v}, "coordinate vector of wrong length");
    if (!report.ok()) return report;
    for (Rank r : kRanks)
      for (Index i = 0; i < poset.count(r); ++i) {
        const FaceGeometry& g = surface.geometry(r, i);
        if (g.interior.empty())
          report.add(Code::MISSING_GEOMETRY, poset.face(r, i), "face geometry unavailable");
        else if (g.affine_dim != poset.dim_of(r))
          report.add(Code::DEGENERATE_FACE, poset.face(r, i),
                     "vertices span dimension " + std::to_string(g.affine_dim));
      }
    return report;
  }

  const auto& eqs = surface.equations();
  if (eqs.size() != poset.count(Rank::Facet)) {
    report.add(Code::MISSING_GEOMETRY, std::nullopt, "facet equation count mismatch");
    return report;
  }
  for (Index h = 0; h < eqs.size(); ++h)
    if (eqs[h].normal.size() != n || is_zero(eqs[h].normal))
      report.add(Code::ZERO_NORMAL, poset.face(Rank::Facet, h), "facet normal is zero or malformed");
  for (Rank r : kRanks)
    for (Index i = 0; i < poset.count(r); ++i)
      if (surface.interior_point(r, i).empty())
        report.add(Code::MISSING_GEOMETRY, poset.face(r, i), "witness point missing");
  if (!report.ok()) return report;

  auto check = [&](FaceId face, const RVec& w, Index h) {
    if (!satisfies(eqs[h], w))
      report.add(Code::WITNESS_OFF_FACET, face,
                 "witness off " + to_string(poset.face(Rank::Facet, h)));
  };
  for (Index h = 0; h < poset.count(Rank::Facet); ++h)
    check(poset.face(Rank::Facet, h), surface.interior_point(Rank::Facet, h), h);
  for (Index g = 0; g < poset.count(Rank::Ridge); ++g)
    for (Index h : poset.up(Rank::Ridge, g))
      check(poset.face(Rank::Ridge, g), surface.interior_point(Rank::Ridge, g), h);
  for (Index f = 0; f < poset.count(Rank::Peak); ++f)
    for (Index h : star_facets(poset, f))
      check(poset.face(Rank::Peak, f), surface.interior_point(Rank::Peak, f), h);
  return report;
}

Basis direction_space(const PLSurface& surface, Index peak) {
  const FacePoset& poset = surface.poset();
  const std::size_t n = static_cast<std::size_t>(surface.n());
  const FaceId id = poset.face(Rank::Peak, peak);

  if (surface.mode() == GeometryMode::Vertices) {
    const FaceGeometry& g = surface.geometry(Rank::Peak, peak);
    if (g.interior.empty() || g.affine_dim != surface.n() - 3)
      throw Error(Code::DEGENERATE_FACE, to_string(id) + " does not span dimension n-3");
    std::vector<RVec> diffs;
    const RVec& base = surface.vertices()[g.frame.front()];
    for (std::size_t j = 1; j < g.frame.size(); ++j)
      diffs.push_back(surface.vertices()[g.frame[j]] - base);
    return row_basis(diffs);
  }

  std::vector<RVec> normals;
  for (Index h : star_facets(poset, peak)) normals.push_back(surface.equations()[h].normal);
  if (rank(normals) != 3)
    throw Error(Code::DEGENERATE_FACE, to_string(id) + " facet normals do not have rank 3");
  return orthogonal_complement(normals, n);
}

}  // namespace plconvex
