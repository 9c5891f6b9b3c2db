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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plconvex/error.hpp"

namespace plconvex {

using Index = std::uint32_t;

/// A face of the surface complex. Only the dimensions 0, n-3, n-2 and n-1
/// (vertices, peaks, ridges, facets) are ever stored.
struct FaceId {
  int dim = 0;
  Index index = 0;

  auto operator<=>(const FaceId&) const = default;
};

/// "v3" for vertices, "e3" for edges, "f<dim>:<index>" otherwise.
std::string to_string(FaceId id);

/// Ranks kept by the poset, in increasing dimension.
enum class Rank { Peak = 0, Ridge = 1, Facet = 2 };

/// Compressed adjacency lists (one sorted row per face).
class Csr {
 public:
  Csr() = default;
  explicit Csr(const std::vector<std::vector<Index>>& rows);

  std::size_t rows() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool empty() const { return rows() == 0; }
  std::span<const Index> operator[](std::size_t row) const {
    return {values_.data() + offsets_[row], values_.data() + offsets_[row + 1]};
  }
  std::size_t total() const { return values_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Index> values_;
};

/// Raw per-rank tables used to build a FacePoset. `vertices` and `up` may
/// be empty (absent); when present they have one row per face.
struct RankTable {
  std::size_t count = 0;
  std::vector<std::vector<Index>> vertices;
  std::vector<std::vector<Index>> up;
};

struct PosetData {
  int n = 3;
  std::size_t vertex_count = 0;
  /// For n = 3 the peaks are the vertices: `count` must equal
  /// vertex_count and `vertices` is implied (singletons).
  RankTable peaks;
  RankTable ridges;
  RankTable facets;
};

/// Fills every absent `up` table of peaks and ridges from vertex-list
/// containment. Requires vertex lists on both ranks involved; invalid
/// vertex ids are skipped (validate_poset reports them).
void derive_incidences(PosetData& data);

/// Partial face poset of a closed (n-1)-manifold: vertices plus the three
/// top ranks. Immutable after construction; rows are stored sorted.
class FacePoset {
 public:
  FacePoset() = default;
  explicit FacePoset(const PosetData& data);

  int n() const { return n_; }
  int dim_of(Rank r) const { return n_ - 3 + static_cast<int>(r); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t count(Rank r) const { return tables_[static_cast<int>(r)].count; }
  /// Number of faces of dimension `dim` (0 or n-3..n-1), 0 otherwise.
  std::size_t count_dim(int dim) const;

  bool has_vertex_lists(Rank r) const { return !tables_[static_cast<int>(r)].vertices.empty(); }
  bool has_up(Rank r) const { return !tables_[static_cast<int>(r)].up.empty(); }

  std::span<const Index> vertices(Rank r, Index i) const;
  std::span<const Index> up(Rank r, Index i) const {
    return tables_[static_cast<int>(r)].up[i];
  }

  /// f_{n-3,n-2}: number of peak/ridge incidences.
  std::size_t peak_ridge_incidences() const;

  FaceId face(Rank r, Index i) const { return {dim_of(r), i}; }

  /// Returns the raw tables (sorted rows), e.g. to rebuild a modified copy.
  PosetData data() const;

 private:
  struct Table {
    std::size_t count = 0;
    Csr vertices;
    Csr up;
  };
  int n_ = 3;
  std::size_t vertex_count_ = 0;
  Table tables_[3];
};

struct Violation {
  Code code;
  std::optional<FaceId> face;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(Code code, std::optional<FaceId> face, std::string message) {
    violations.push_back({code, face, std::move(message)});
  }
};

enum class GeometryMode { Vertices, Equations };

/// Id ranges, required ranks for the chosen geometry mode, and vertex-list
/// containment along every recorded incidence.
ValidationReport validate_poset(const FacePoset& poset, GeometryMode mode = GeometryMode::Vertices);

/// Every ridge lies in exactly two facets.
ValidationReport check_closed(const FacePoset& poset);

/// The facet graph (adjacent through shared ridges) is connected.
ValidationReport check_connected(const FacePoset& poset);

/// Alternating cycle G_0, H_0, G_1, H_1, ... around a peak: H_i contains
/// G_i and G_{i+1 mod k}.
struct LinkCycle {
  FaceId center;
  std::vector<Index> ridges;
  std::vector<Index> facets;

  std::size_t size() const { return ridges.size(); }
  /// The interleaved sequence G_0, H_0, G_1, H_1, ...
  std::vector<FaceId> entries(const FacePoset& poset) const;
};

/// Starts at the least-index ridge, heading into its least-index facet.
/// Throws Error(NOT_SINGLE_CYCLE) when the star is not one combinatorial
/// circle.
LinkCycle link_cycle(const FacePoset& poset, Index peak);

}  // namespace plconvex
