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

#include "plconvex/complex.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace plconvex {

std::string to_string(FaceId id) {
  if (id.dim == 0) return "v" + std::to_string(id.index);
  if (id.dim == 1) return "e" + std::to_string(id.index);
  return "f" + std::to_string(id.dim) + ":" + std::to_string(id.index);
}

Csr::Csr(const std::vector<std::vector<Index>>& rows) {
  offsets_.reserve(rows.size() + 1);
  offsets_.push_back(0);
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  values_.reserve(total);
  for (const auto& r : rows) {
    const auto begin = values_.size();
    values_.insert(values_.end(), r.begin(), r.end());
    std::sort(values_.begin() + static_cast<std::ptrdiff_t>(begin), values_.end());
    offsets_.push_back(values_.size());
  }
}

namespace {

std::vector<std::vector<Index>> singletons(std::size_t count) {
  std::vector<std::vector<Index>> rows(count);
  for (std::size_t i = 0; i < count; ++i) rows[i] = {static_cast<Index>(i)};
  return rows;
}

// lower is a subset of upper; both sorted. Cost |lower| log |upper| so that
// large facets do not make incidence checks quadratic.
bool contains_all(std::span<const Index> upper, std::span<const Index> lower) {
  return std::all_of(lower.begin(), lower.end(), [&](Index v) {
    return std::binary_search(upper.begin(), upper.end(), v);
  });
}

// up[g] = { h : vertices(g) is a subset of vertices(h) }.
std::vector<std::vector<Index>> containment_up(const std::vector<std::vector<Index>>& lower,
                                               const std::vector<std::vector<Index>>& upper,
                                               std::size_t vertex_count) {
  std::vector<std::vector<Index>> by_vertex(vertex_count);
  std::vector<std::vector<Index>> upper_sorted(upper.size());
  for (std::size_t h = 0; h < upper.size(); ++h) {
    upper_sorted[h] = upper[h];
    std::sort(upper_sorted[h].begin(), upper_sorted[h].end());
    for (Index v : upper[h])
      if (v < vertex_count) by_vertex[v].push_back(static_cast<Index>(h));
  }
  std::vector<std::vector<Index>> up(lower.size());
  for (std::size_t g = 0; g < lower.size(); ++g) {
    if (lower[g].empty() || lower[g].front() >= vertex_count) continue;
    std::vector<Index> gv = lower[g];
    std::sort(gv.begin(), gv.end());
    for (Index h : by_vertex[lower[g].front()])
      if (contains_all(upper_sorted[h], gv))
        up[g].push_back(h);
    std::sort(up[g].begin(), up[g].end());
    up[g].erase(std::unique(up[g].begin(), up[g].end()), up[g].end());
  }
  return up;
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) { parent[find(a)] = find(b); }
};

}  // namespace

void derive_incidences(PosetData& data) {
  if (data.n == 3 && data.peaks.vertices.empty())
    data.peaks.vertices = singletons(data.peaks.count);
  if (data.peaks.up.empty() && !data.peaks.vertices.empty() && !data.ridges.vertices.empty())
    data.peaks.up = containment_up(data.peaks.vertices, data.ridges.vertices, data.vertex_count);
  if (data.ridges.up.empty() && !data.ridges.vertices.empty() && !data.facets.vertices.empty())
    data.ridges.up = containment_up(data.ridges.vertices, data.facets.vertices, data.vertex_count);
}

FacePoset::FacePoset(const PosetData& data) : n_(data.n), vertex_count_(data.vertex_count) {
  const RankTable* src[3] = {&data.peaks, &data.ridges, &data.facets};
  for (int r = 0; r < 3; ++r) {
    tables_[r].count = src[r]->count;
    if (!src[r]->vertices.empty()) tables_[r].vertices = Csr(src[r]->vertices);
    if (!src[r]->up.empty() && r < 2) tables_[r].up = Csr(src[r]->up);
  }
  if (n_ == 3 && tables_[0].vertices.empty() && tables_[0].count == vertex_count_)
    tables_[0].vertices = Csr(singletons(vertex_count_));
}

std::size_t FacePoset::count_dim(int dim) const {
  for (int r = 0; r < 3; ++r)
    if (dim_of(static_cast<Rank>(r)) == dim) return tables_[r].count;
  return dim == 0 ? vertex_count_ : 0;
}

std::span<const Index> FacePoset::vertices(Rank r, Index i) const {
  return tables_[static_cast<int>(r)].vertices[i];
}

std::size_t FacePoset::peak_ridge_incidences() const { return tables_[0].up.total(); }

PosetData FacePoset::data() const {
  PosetData d;
  d.n = n_;
  d.vertex_count = vertex_count_;
  RankTable* dst[3] = {&d.peaks, &d.ridges, &d.facets};
  for (int r = 0; r < 3; ++r) {
    dst[r]->count = tables_[r].count;
    auto copy = [](const Csr& csr) {
      std::vector<std::vector<Index>> rows(csr.rows());
      for (std::size_t i = 0; i < csr.rows(); ++i) rows[i].assign(csr[i].begin(), csr[i].end());
      return rows;
    };
    dst[r]->vertices = copy(tables_[r].vertices);
    dst[r]->up = copy(tables_[r].up);
  }
  return d;
}

ValidationReport validate_poset(const FacePoset& poset, GeometryMode mode) {
  ValidationReport report;
  if (poset.n() < 3) {
    report.add(Code::MISSING_RANK, std::nullopt, "ambient dimension must be at least 3");
    return report;
  }
  const Rank ranks[3] = {Rank::Peak, Rank::Ridge, Rank::Facet};
  for (Rank r : ranks)
    if (poset.count(r) == 0)
      report.add(Code::MISSING_RANK, std::nullopt,
                 "no faces of dimension " + std::to_string(poset.dim_of(r)));
  if (poset.n() == 3 && poset.count(Rank::Peak) != poset.vertex_count())
    report.add(Code::INVALID_ID, std::nullopt, "peak and vertex counts differ for n = 3");
  if (mode == GeometryMode::Vertices && poset.vertex_count() == 0)
    report.add(Code::MISSING_RANK, std::nullopt, "no vertices");
  if (!report.ok()) return report;

  for (Rank r : {Rank::Peak, Rank::Ridge}) {
    if (!poset.has_up(r)) {
      report.add(Code::MISSING_RANK, std::nullopt,
                 "incidences of dimension " + std::to_string(poset.dim_of(r)) + " absent");
      continue;
    }
    const Rank next = static_cast<Rank>(static_cast<int>(r) + 1);
    for (Index i = 0; i < poset.count(r); ++i) {
      auto up = poset.up(r, i);
      for (std::size_t j = 0; j < up.size(); ++j) {
        if (up[j] >= poset.count(next))
          report.add(Code::INVALID_ID, poset.face(r, i),
                     "references " + to_string(poset.face(next, up[j])) + " which does not exist");
        else if (j > 0 && up[j] == up[j - 1])
          report.add(Code::DUPLICATE_REFERENCE, poset.face(r, i), "incidence listed twice");
      }
    }
  }

  const bool need_vertices = mode == GeometryMode::Vertices;
  bool lists_valid = true;
  for (Rank r : ranks) {
    if (!poset.has_vertex_lists(r)) {
      if (need_vertices) {
        report.add(Code::MISSING_GEOMETRY, std::nullopt,
                   "vertex lists of dimension " + std::to_string(poset.dim_of(r)) + " absent");
        lists_valid = false;
      }
      continue;
    }
    for (Index i = 0; i < poset.count(r); ++i) {
      auto vs = poset.vertices(r, i);
      if (vs.empty()) {
        report.add(Code::MISSING_GEOMETRY, poset.face(r, i), "empty vertex list");
        lists_valid = false;
      }
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j] >= poset.vertex_count()) {
          report.add(Code::INVALID_ID, poset.face(r, i),
                     "references vertex " + std::to_string(vs[j]) + " which does not exist");
          lists_valid = false;
        } else if (j > 0 && vs[j] == vs[j - 1]) {
          report.add(Code::DUPLICATE_REFERENCE, poset.face(r, i), "vertex listed twice");
        }
      }
    }
  }
  if (!lists_valid || !report.ok()) return report;

  for (Rank r : {Rank::Peak, Rank::Ridge}) {
    const Rank next = static_cast<Rank>(static_cast<int>(r) + 1);
    if (!poset.has_vertex_lists(r) || !poset.has_vertex_lists(next)) continue;
    for (Index i = 0; i < poset.count(r); ++i) {
      auto lower = poset.vertices(r, i);
      for (Index h : poset.up(r, i)) {
        auto upper = poset.vertices(next, h);
        if (!contains_all(upper, lower))
          report.add(Code::VERTEX_CONTAINMENT, poset.face(r, i),
                     "vertices not contained in " + to_string(poset.face(next, h)));
      }
    }
  }
  return report;
}

ValidationReport check_closed(const FacePoset& poset) {
  ValidationReport report;
  for (Index g = 0; g < poset.count(Rank::Ridge); ++g) {
    const auto k = poset.up(Rank::Ridge, g).size();
    if (k != 2)
      report.add(Code::NOT_CLOSED, poset.face(Rank::Ridge, g),
                 "lies in " + std::to_string(k) + " facets");
  }
  return report;
}

ValidationReport check_connected(const FacePoset& poset) {
  ValidationReport report;
  const std::size_t facets = poset.count(Rank::Facet);
  UnionFind uf(facets);
  for (Index g = 0; g < poset.count(Rank::Ridge); ++g) {
    auto up = poset.up(Rank::Ridge, g);
    for (std::size_t j = 1; j < up.size(); ++j) uf.unite(up[0], up[j]);
  }
  std::size_t components = 0;
  for (Index h = 0; h < facets; ++h)
    if (uf.find(h) == h) ++components;
  if (components > 1) {
    // Report the least facet outside the component of facet 0.
    Index witness = 0;
    for (Index h = 0; h < facets; ++h)
      if (uf.find(h) != uf.find(0)) {
        witness = h;
        break;
      }
    report.add(Code::NOT_CONNECTED, poset.face(Rank::Facet, witness),
               std::to_string(components) + " facet components");
  }
  return report;
}

std::vector<FaceId> LinkCycle::entries(const FacePoset& poset) const {
  std::vector<FaceId> out;
  out.reserve(2 * size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.push_back(poset.face(Rank::Ridge, ridges[i]));
    out.push_back(poset.face(Rank::Facet, facets[i]));
  }
  return out;
}

LinkCycle link_cycle(const FacePoset& poset, Index peak) {
  const FaceId center = poset.face(Rank::Peak, peak);
  auto fail = [&](const std::string& what) {
    throw Error(Code::NOT_SINGLE_CYCLE, to_string(center) + ": " + what);
  };
  auto ridges = poset.up(Rank::Peak, peak);
  if (ridges.size() < 2) fail("fewer than two incident ridges");

  // (facet, ridge) pairs of the star, grouped by facet.
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(2 * ridges.size());
  for (Index g : ridges) {
    auto fs = poset.up(Rank::Ridge, g);
    if (fs.size() != 2) fail("ridge " + to_string(poset.face(Rank::Ridge, g)) + " not in two facets");
    pairs.emplace_back(fs[0], g);
    pairs.emplace_back(fs[1], g);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); i += 2)
    if (i + 1 >= pairs.size() || pairs[i].first != pairs[i + 1].first ||
        (i + 2 < pairs.size() && pairs[i + 2].first == pairs[i].first))
      fail("facet " + to_string(poset.face(Rank::Facet, pairs[i].first)) +
           " does not meet the star in exactly two ridges");

  auto other_ridge = [&](Index h, Index g) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(h, Index{0}));
    return it->second == g ? (it + 1)->second : it->second;
  };
  auto ridge_facets = [&](Index g) { return poset.up(Rank::Ridge, g); };

  LinkCycle cycle;
  cycle.center = center;
  const Index start = ridges.front();
  Index g = start;
  Index h = ridge_facets(g)[0];  // rows are sorted: least-index facet first
  do {
    cycle.ridges.push_back(g);
    cycle.facets.push_back(h);
    if (cycle.ridges.size() > ridges.size()) fail("walk does not close");
    const Index next_g = other_ridge(h, g);
    auto fs = ridge_facets(next_g);
    h = fs[0] == h ? fs[1] : fs[0];
    g = next_g;
  } while (g != start);
  if (cycle.ridges.size() != ridges.size()) fail("star has more than one link component");
  return cycle;
}

}  // namespace plconvex
