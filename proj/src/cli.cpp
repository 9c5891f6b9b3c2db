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

#include "plconvex/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

#include "plconvex/instances.hpp"
#include "plconvex/io.hpp"
#include "plconvex/oracle.hpp"
#include "plconvex/verifier.hpp"

namespace plconvex {

namespace {

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Convex: return kExitConvex;
    case VerdictKind::NotConvex: return kExitNotConvex;
    case VerdictKind::Invalid: return kExitInvalid;
  }
  return kExitInvalid;
}

struct VerifyArgs {
  std::string file;
  bool oracle = false;
  bool parallel = false;
  bool witness = false;
  bool all = false;
  int threads = 0;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  PLSurface surface;
  try {
    surface = load_surface(a.file);
  } catch (const Error& e) {
    out << "INVALID " << to_string(e.code()) << "\n";
    err << e.what() << "\n";
    return kExitInvalid;
  }

  VerifyOptions opt;
  opt.parallel = a.parallel;
  opt.collect_all = a.all;
  opt.threads = a.threads;
  const Verdict v = verify(surface, opt);

  out << to_string(v.kind);
  if (v.kind == VerdictKind::Invalid) {
    out << " " << v.reason;
    if (a.witness && v.witness) out << " witness=" << to_string(*v.witness);
  } else if (v.kind == VerdictKind::NotConvex && a.witness) {
    out << " witness=" << to_string(*v.witness) << " reason=" << v.reason;
  }
  out << "\n";
  if (a.all)
    for (const FaceFailure& f : v.failures)
      out << "failure " << to_string(f.face) << " " << f.reason << "\n";

  if (a.oracle) {
    out << "oracle ";
    if (v.kind == VerdictKind::Invalid) {
      out << "skipped (invalid input)\n";
    } else if (surface.mode() != GeometryMode::Vertices) {
      out << "skipped (equations mode)\n";
    } else {
      try {
        const OracleVerdict o = oracle_verdict(surface);
        const bool agree = o.convex == (v.kind == VerdictKind::Convex);
        out << (o.convex ? "YES" : "NO") << (agree ? " agree" : " DISAGREE") << "\n";
      } catch (const Error& e) {
        out << "skipped " << to_string(e.code()) << "\n";
      }
    }
  }
  return exit_code(v.kind);
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string dent_t = "1/4";
  long dent_vertex = -1;
  bool equations = false;
  std::string output;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  GenSpec spec;
  spec.family = a.family;
  spec.seed = a.seed;
  if (a.params.size() > 1) throw Error(Code::BAD_PARAMETER, "at most one size parameter");
  if (!a.params.empty()) {
    try {
      spec.size = std::stoi(a.params[0]);
    } catch (const std::exception&) {
      throw Error(Code::BAD_PARAMETER, "size parameter must be an integer");
    }
  } else if (a.family == "prism") {
    spec.size = 6;
  } else if (a.family == "dented-cube") {
    spec.size = 1;
  }
  if (a.dent_vertex >= 0) {
    spec.dent_vertex = static_cast<Index>(a.dent_vertex);
    spec.dent_t = parse_rational(a.dent_t);
  }
  PLSurface s = generate(spec);
  if (a.equations) s = to_equations_mode(s);
  const std::string text = emit_pls(s);
  if (a.output.empty() || a.output == "-")
    out << text;
  else
    write_text_file(a.output, text);
  return 0;
}

struct BenchArgs {
  std::string family = "prism";
  std::vector<int> sizes;
  int repeat = 3;
  bool parallel = false;
};

int run_bench(const BenchArgs& a, std::ostream& out) {
  if (a.family != "prism") throw Error(Code::BAD_PARAMETER, "bench supports --family prism");
  if (a.repeat < 1) throw Error(Code::BAD_PARAMETER, "--repeat must be positive");
  out << "m,incidences,entry_evaluations,seconds\n";
  VerifyOptions opt;
  opt.parallel = a.parallel;
  for (int m : a.sizes) {
    const PLSurface s = gen_prism(m);
    double best = std::numeric_limits<double>::infinity();
    Verdict v;
    for (int r = 0; r < a.repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      v = verify(s, opt);
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    if (v.kind != VerdictKind::Convex)
      throw Error(Code::DEGENERATE, "prism " + std::to_string(m) + " not verified convex");
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.6f", best);
    out << m << "," << s.poset().peak_ridge_incidences() << "," << v.stats.entry_evaluations << ","
        << secs << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact convexity verification for PL surfaces", "plconvex"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Decide whether a surface bounds a convex body");
  verify_cmd->add_option("file", va.file, "PLS or OFF file")->required();
  verify_cmd->add_flag("--oracle", va.oracle, "Cross-check with the supporting-hyperplane oracle");
  verify_cmd->add_flag("--parallel", va.parallel, "Check stars concurrently");
  verify_cmd->add_flag("--witness", va.witness, "Print the least failing face and its reason");
  verify_cmd->add_flag("--all", va.all, "List every failing face");
  verify_cmd->add_option("--threads", va.threads, "Thread count for --parallel");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated surface as PLS");
  gen_cmd
      ->add_option("family", ga.family,
                   "hypercube | cross-polytope | simplex | prism | schonhardt | dented-cube | "
                   "split-cube")
      ->required();
  gen_cmd->add_option("params", ga.params, "n, m or dent count, depending on the family");
  gen_cmd->add_option("--seed", ga.seed, "rigid motion seed (0 = none)");
  gen_cmd->add_option("--dent-vertex", ga.dent_vertex, "vertex to push toward the centroid");
  gen_cmd->add_option("--dent-t", ga.dent_t, "dent amount as p/q");
  gen_cmd->add_flag("--equations", ga.equations, "Emit facet equations instead of vertices");
  gen_cmd->add_option("-o,--output", ga.output, "output path ('-' for stdout)")->required();

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Time verify on a scaling family, CSV output");
  bench_cmd->add_option("--family", ba.family, "family (prism)");
  bench_cmd->add_option("--sizes", ba.sizes, "comma-separated sizes")->delimiter(',')->required();
  bench_cmd->add_option("--repeat", ba.repeat, "timed runs per size, minimum reported");
  bench_cmd->add_flag("--parallel", ba.parallel, "Use the parallel verifier");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*verify_cmd) return run_verify(va, out, err);
    if (*gen_cmd) return run_gen(ga, out);
    return run_bench(ba, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace plconvex
