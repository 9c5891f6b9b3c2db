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

#include <benchmark/benchmark.h>

#include "plconvex/instances.hpp"
#include "plconvex/verifier.hpp"

namespace {

using plconvex::VerifyOptions;

void run(benchmark::State& state, bool parallel) {
  const plconvex::PLSurface s = plconvex::gen_prism(static_cast<int>(state.range(0)));
  VerifyOptions opt;
  opt.parallel = parallel;
  for (auto _ : state) {
    const plconvex::Verdict v = plconvex::verify(s, opt);
    benchmark::DoNotOptimize(v.stats.entry_evaluations);
  }
  const auto f = static_cast<double>(s.poset().peak_ridge_incidences());
  state.counters["incidences"] = f;
  state.counters["per_incidence"] =
      benchmark::Counter(f, benchmark::Counter::kIsIterationInvariantRate |
                                benchmark::Counter::kInvert);
}

void BM_VerifySerial(benchmark::State& state) { run(state, false); }
void BM_VerifyParallel(benchmark::State& state) { run(state, true); }

BENCHMARK(BM_VerifySerial)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
