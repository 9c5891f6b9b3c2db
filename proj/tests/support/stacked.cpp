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
#include "support.hpp"

namespace plconvex::testing {

PLSurface random_stacked(std::mt19937_64& rng, int steps) {
  std::vector<RVec> xs = {make_vec({0, 0, 0}), make_vec({4, 0, 0}), make_vec({0, 4, 0}),
                          make_vec({0, 0, 4})};
  // Outward orientation: (b - a) x (c - a) points away from the body.
  std::vector<std::vector<Index>> tris = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
  std::uniform_int_distribution<int> offset(-3, 6);
  for (int s = 0; s < steps; ++s) {
    const std::size_t t = std::uniform_int_distribution<std::size_t>(0, tris.size() - 1)(rng);
    const auto tri = tris[t];
    const RVec& a = xs[tri[0]];
    const RVec& b = xs[tri[1]];
    const RVec& c = xs[tri[2]];
    const RVec centroid = Rational(1, 3) * (a + b + c);
    Rational h(offset(rng), 16);
    h.canonicalize();
    RVec p = centroid + h * cross(b - a, c - a);
    for (auto& x : p) x.canonicalize();
    const Index apex = static_cast<Index>(xs.size());
    xs.push_back(std::move(p));
    tris[t] = {tri[0], tri[1], apex};
    tris.push_back({tri[1], tri[2], apex});
    tris.push_back({tri[2], tri[0], apex});
  }
  return polyhedron_from_cycles(std::move(xs), tris);
}

}  // namespace plconvex::testing
