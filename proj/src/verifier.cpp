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

#include "plconvex/verifier.hpp"

#include <omp.h>

#include <atomic>
#include <string>

namespace plconvex {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Convex: return "YES";
    case VerdictKind::NotConvex: return "NO";
    case VerdictKind::Invalid: return "INVALID";
  }
  return "INVALID";
}

namespace {

FaceCheck invalid(const Error& e) {
  FaceCheck out;
  out.status = FaceStatus::Invalid;
  out.reason = std::string(to_string(e.code()));
  return out;
}

FaceCheck check_star(const PLSurface& surface, const LinkCycle& cycle, const Projection3& p) {
  const Fan3 fan = build_fan(surface, cycle, p);
  const CCheckResult res = c_check(fan);
  FaceCheck out;
  out.status = res.convex ? FaceStatus::Convex : FaceStatus::NotConvex;
  out.reason = std::string(to_string(res.reason));
  out.entries = fan.entries.size();
  return out;
}

bool failed(const FaceCheck& c) { return c.status != FaceStatus::Convex; }

}  // namespace

FaceCheck verify_face(const PLSurface& surface, Index peak, ProjectionRoute route) {
  try {
    const LinkCycle cycle = link_cycle(surface.poset(), peak);
    const Basis kernel = direction_space(surface, peak);
    const Projection3 p =
        complementary_projection(kernel, static_cast<std::size_t>(surface.n()), route);
    return check_star(surface, cycle, p);
  } catch (const Error& e) {
    return invalid(e);
  }
}

FaceCheck verify_face(const PLSurface& surface, Index peak, const Projection3& projection) {
  try {
    const LinkCycle cycle = link_cycle(surface.poset(), peak);
    return check_star(surface, cycle, projection);
  } catch (const Error& e) {
    return invalid(e);
  }
}

ValidationReport preflight(const PLSurface& surface) {
  const FacePoset& poset = surface.poset();
  if (auto r = validate_poset(poset, surface.mode()); !r.ok()) return r;
  if (auto r = check_closed(poset); !r.ok()) return r;
  if (auto r = check_connected(poset); !r.ok()) return r;
  return check_realization(surface);
}

Verdict verify(const PLSurface& surface, const VerifyOptions& options) {
  Verdict verdict;
  if (ValidationReport report = preflight(surface); !report.ok()) {
    const Violation& v = report.violations.front();
    verdict.kind = VerdictKind::Invalid;
    verdict.reason = std::string(to_string(v.code));
    verdict.witness = v.face;
    return verdict;
  }

  const FacePoset& poset = surface.poset();
  const Index peaks = static_cast<Index>(poset.count(Rank::Peak));
  auto record = [&](Index f, const FaceCheck& c) {
    verdict.failures.push_back({poset.face(Rank::Peak, f), c.status, c.reason});
  };

  if (!options.parallel) {
    for (Index f = 0; f < peaks; ++f) {
      const FaceCheck c = verify_face(surface, f, options.route);
      ++verdict.stats.faces_checked;
      verdict.stats.entry_evaluations += c.entries;
      if (!failed(c)) continue;
      record(f, c);
      if (!options.collect_all) break;
    }
  } else {
    std::vector<FaceCheck> results(peaks);
    std::vector<char> evaluated(peaks, 0);
    std::atomic<Index> first_failure{peaks};
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    const bool collect_all = options.collect_all;
    const ProjectionRoute route = options.route;

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long i = 0; i < static_cast<long>(peaks); ++i) {
      const Index f = static_cast<Index>(i);
      // Faces beyond a known failure cannot change the least-index witness.
      if (!collect_all && f > first_failure.load(std::memory_order_relaxed)) continue;
      results[f] = verify_face(surface, f, route);
      evaluated[f] = 1;
      if (failed(results[f])) {
        Index cur = first_failure.load(std::memory_order_relaxed);
        while (f < cur && !first_failure.compare_exchange_weak(cur, f)) {
        }
      }
    }

    for (Index f = 0; f < peaks; ++f) {
      if (!evaluated[f]) continue;
      ++verdict.stats.faces_checked;
      verdict.stats.entry_evaluations += results[f].entries;
    }
    for (Index f = 0; f < peaks; ++f) {
      if (!evaluated[f] || !failed(results[f])) continue;
      record(f, results[f]);
      if (!collect_all) break;
    }
  }

  if (verdict.failures.empty()) {
    verdict.kind = VerdictKind::Convex;
    return verdict;
  }
  const FaceFailure& first = verdict.failures.front();
  verdict.kind = first.status == FaceStatus::Invalid ? VerdictKind::Invalid : VerdictKind::NotConvex;
  verdict.witness = first.face;
  verdict.reason = first.reason;
  return verdict;
}

}  // namespace plconvex
