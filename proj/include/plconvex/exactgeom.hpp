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

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "plconvex/rational.hpp"

namespace plconvex {

/// Linearly independent vectors of a common length.
using Basis = std::vector<RVec>;

/// Exact matrix rank of the rows.
std::size_t rank(std::span<const RVec> vectors);

/// Reduced row echelon basis of span(vectors).
Basis row_basis(std::span<const RVec> vectors);

/// Basis of { y in Q^n : y . v = 0 for all v in vectors }.
Basis orthogonal_complement(std::span<const RVec> vectors, std::size_t n);

/// Incremental echelon form. insert() reports whether the vector was
/// independent of everything inserted before; rows keep insertion order.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}

  bool insert(RVec v);
  std::size_t size() const { return rows_.size(); }
  std::size_t dimension() const { return n_; }
  const std::vector<RVec>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<RVec> rows_;
  std::vector<std::size_t> pivots_;
};

enum class ProjectionRoute {
  /// Projection along the kernel onto the first complementary coordinate
  /// 3-plane (axis triples scanned lexicographically).
  CoordinateFirst,
  /// Rows spanning the orthogonal complement of the kernel.
  OrthogonalComplement,
};

/// Rank-3 linear map Q^n -> Q^3 whose kernel is span(kernel).
struct Projection3 {
  std::array<RVec, 3> rows;
  Basis kernel;
  /// Target axes when the map is a coordinate projection, {-1,-1,-1} otherwise.
  std::array<int, 3> axes{-1, -1, -1};

  std::size_t ambient_dim() const { return rows[0].size(); }
};

Projection3 complementary_projection(const Basis& kernel, std::size_t n,
                                     ProjectionRoute route = ProjectionRoute::CoordinateFirst);

/// Checks the postconditions: every kernel vector maps to zero and the rows
/// have rank 3.
bool is_complementary(const Projection3& p);

RVec project(const Projection3& p, const RVec& v);

/// Sign of det(b - a, c - a) for points of Q^2.
int orientation2d(const RVec& a, const RVec& b, const RVec& c);

/// Sign of det(b - a, c - a, d - a) for points of Q^3.
int orientation3d(const RVec& a, const RVec& b, const RVec& c, const RVec& d);

}  // namespace plconvex
