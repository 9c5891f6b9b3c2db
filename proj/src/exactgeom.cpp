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

#include "plconvex/exactgeom.hpp"

#include <cassert>
#include <utility>

#include "plconvex/error.hpp"

namespace plconvex {

namespace {

using Matrix = std::vector<RVec>;

// In-place reduction to RREF with pivots taken among the first `cols`
// columns; row operations span the full width, so augmented columns follow.
// Returns the pivot column of each leading row.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[row].size(); ++c)
        if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Inverse of a square matrix, or empty when singular.
Matrix inverse(Matrix a) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    a[i].resize(2 * k, Rational(0));
    a[i][k + i] = 1;
  }
  auto pivots = reduce(a, k);
  if (pivots.size() != k || (k > 0 && pivots.back() != k - 1)) return {};
  Matrix inv(k, RVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv[i][j] = a[i][k + j];
  return inv;
}

Projection3 coordinate_route(const Basis& kernel, std::size_t n) {
  const std::size_t k = kernel.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i)
          if (i != a && i != b && i != c) rest.push_back(i);
        // x = sum_r coef_r kernel_r + l with l supported on {a, b, c};
        // on the remaining axes coef = (K_rest^T)^{-1} x_rest.
        Matrix kt(k, RVec(k));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t j = 0; j < k; ++j) kt[j][r] = kernel[r][rest[j]];
        Matrix solve = inverse(kt);
        if (k > 0 && solve.empty()) continue;

        Projection3 p;
        p.kernel = kernel;
        p.axes = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
        const std::array<std::size_t, 3> axes{a, b, c};
        for (std::size_t t = 0; t < 3; ++t) {
          RVec row = zero_vec(n);
          row[axes[t]] = 1;
          for (std::size_t j = 0; j < k; ++j) {
            Rational w = 0;
            for (std::size_t r = 0; r < k; ++r) w += kernel[r][axes[t]] * solve[r][j];
            row[rest[j]] = -w;
          }
          p.rows[t] = std::move(row);
        }
        return p;
      }
  throw Error(Code::DEGENERATE_FACE, "kernel has no complementary coordinate 3-plane");
}

}  // namespace

bool EchelonBasis::insert(RVec v) {
  assert(v.size() == n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    for (std::size_t c = p; c < n_; ++c)
      if (sgn(rows_[i][c]) != 0) v[c] -= f * rows_[i][c];
  }
  std::size_t p = 0;
  while (p < n_ && sgn(v[p]) == 0) ++p;
  if (p == n_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t c = p; c < n_; ++c) v[c] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::size_t rank(std::span<const RVec> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) {
    basis.insert(v);
    if (basis.size() == basis.dimension()) break;
  }
  return basis.size();
}

Basis row_basis(std::span<const RVec> vectors) {
  if (vectors.empty()) return {};
  Matrix m(vectors.begin(), vectors.end());
  reduce(m, vectors.front().size());
  return m;
}

Basis orthogonal_complement(std::span<const RVec> vectors, std::size_t n) {
  Matrix m(vectors.begin(), vectors.end());
  auto pivots = reduce(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Basis out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RVec y = zero_vec(n);
    y[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = -m[r][free];
    out.push_back(std::move(y));
  }
  return out;
}

Projection3 complementary_projection(const Basis& kernel, std::size_t n,
                                     ProjectionRoute route) {
  if (n < 3 || kernel.size() != n - 3)
    throw Error(Code::DEGENERATE_FACE, "kernel is not (n-3)-dimensional");
  if (route == ProjectionRoute::CoordinateFirst) return coordinate_route(kernel, n);

  Basis comp = orthogonal_complement(kernel, n);
  if (comp.size() != 3)
    throw Error(Code::DEGENERATE_FACE, "kernel is not (n-3)-dimensional");
  Projection3 p;
  p.kernel = kernel;
  for (std::size_t t = 0; t < 3; ++t) p.rows[t] = std::move(comp[t]);
  return p;
}

bool is_complementary(const Projection3& p) {
  for (const auto& k : p.kernel)
    for (const auto& row : p.rows)
      if (sgn(dot(row, k)) != 0) return false;
  return rank(p.rows) == 3 && rank(p.kernel) == p.kernel.size() &&
         p.kernel.size() + 3 == p.ambient_dim();
}

RVec project(const Projection3& p, const RVec& v) {
  assert(v.size() == p.ambient_dim());
  if (p.axes[0] >= 0 && p.kernel.empty())
    return RVec{v[p.axes[0]], v[p.axes[1]], v[p.axes[2]]};
  return RVec{dot(p.rows[0], v), dot(p.rows[1], v), dot(p.rows[2], v)};
}

int orientation2d(const RVec& a, const RVec& b, const RVec& c) {
  const Rational det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(det);
}

int orientation3d(const RVec& a, const RVec& b, const RVec& c, const RVec& d) {
  return sgn(dot(cross(b - a, c - a), d - a));
}

}  // namespace plconvex
