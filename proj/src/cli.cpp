// Copyright 2026 The Rainbow Factor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rainbow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "rainbow/fuzz.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/io.hpp"
#include "rainbow/random.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string graph_name(const Params& params) {
  std::string name = "K_" + std::to_string(params.vertex_count());
  if (params.r() != 2) name += "^(" + std::to_string(params.r()) + ")";
  return name;
}

std::string edges_string(std::span<const Edge> edges) {
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += ' ';
    s += e.to_string();
  }
  return s;
}

std::string improper_message(const Coloring& coloring, const ProperVerdict& verdict) {
  const auto& [a, b] = *verdict.witness;
  return "improper coloring: " + a.to_string() + " and " + b.to_string() +
         " intersect and both have color " + std::to_string(coloring.color(a));
}

std::uint64_t default_seed() {
  const char* env = std::getenv("RAINBOW_SEED");
  if (!env || !*env) return 0;
  std::uint64_t seed = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [p, ec] = std::from_chars(env, end, seed);
  if (ec != std::errc{} || p != end) {
    throw UsageError(std::string("RAINBOW_SEED is not an unsigned integer: ") + env);
  }
  return seed;
}

void refuse_overwrite(const std::string& path, bool force) {
  if (!force && path != "-" && fs::exists(path)) {
    throw UsageError(path + " exists; pass --force to overwrite");
  }
}

// Writes text to a path, or to `out` when the path is "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::string jsonl(const std::vector<AugmentationTrace>& traces) {
  std::string text;
  for (const AugmentationTrace& t : traces) text += trace_to_json(t).dump() + "\n";
  return text;
}

// ---- gen ----

struct GenArgs {
  std::string kind = "random-greedy";
  int r = 2;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string strategy = "least-color";
  std::string name;
  std::string out;
  bool force = false;
};

int cmd_gen(const GenArgs& a, bool n_given, std::ostream& out) {
  refuse_overwrite(a.out, a.force);
  GenSpec spec;
  spec.seed = a.seed ? *a.seed : default_seed();
  spec.strategy =
      a.strategy == "random-feasible" ? GreedyStrategy::kRandomFeasible : GreedyStrategy::kLeastColor;
  Coloring coloring = [&] {
    if (a.kind == "fixture") {
      if (a.name.empty()) throw UsageError("--kind fixture needs --name");
      std::optional<Params> params;
      if (n_given) params = Params(a.r, a.n);
      return gen_fixture(a.name, params);
    }
    if (!n_given) throw UsageError("--kind " + a.kind + " needs --n");
    spec.params = Params(a.r, a.n);
    spec.kind = a.kind == "round-robin" ? GenKind::kRoundRobin
                : a.kind == "backtrack" ? GenKind::kBacktrackFactorization
                                        : GenKind::kRandomGreedy;
    return generate(spec);
  }();
  if (a.out == "-") {
    out << coloring_to_json(coloring).dump() << '\n';
  } else {
    write_coloring(a.out, coloring);
    out << "wrote " << a.out << ": " << graph_name(coloring.params()) << ", "
        << coloring.color_count() << " colors\n";
  }
  return kExitOk;
}

// ---- solve ----

struct SolveArgs {
  std::string in;
  std::string method = "auto";
  bool trace = false;
  std::string trace_out;
  std::string out;
  bool force = false;
  bool normalize = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Coloring coloring = read_coloring(a.in, a.normalize);
  if (auto verdict = verify_proper(coloring); !verdict) {
    err << improper_message(coloring, verdict) << '\n';
    return kExitUsage;
  }
  if (!a.out.empty()) refuse_overwrite(a.out, a.force);
  std::string trace_path = a.trace_out;
  if (a.trace && trace_path.empty()) {
    trace_path = (a.out.empty() || a.out == "-") ? "-" : a.out + ".trace.jsonl";
  }

  static const std::map<std::string, SolveMethod> kMethods{{"auto", SolveMethod::kAuto},
                                                           {"augment", SolveMethod::kAugment},
                                                           {"exhaustive", SolveMethod::kExhaustive},
                                                           {"k3r", SolveMethod::kK3r}};
  SolveOptions options;
  options.method = kMethods.at(a.method);
  options.record_traces = a.trace;
  options.check_proper = false;

  SolveReport report;
  try {
    report = solve(coloring, options);
  } catch (const AugmentationContradiction& e) {
    err << "THEOREM CONTRADICTION: " << e.what() << '\n';
    const std::string dump = jsonl(e.traces());
    if (trace_path.empty() || trace_path == "-") {
      err << dump;
    } else {
      write_text(trace_path, dump);
      err << "traces written to " << trace_path << '\n';
    }
    return kExitContradiction;
  } catch (const TheoremContradiction& e) {
    err << "THEOREM CONTRADICTION: " << e.what() << '\n';
    return kExitContradiction;
  }

  if (!trace_path.empty()) emit(trace_path, jsonl(report.traces), out);
  if (!report.factor) {
    if (report.absence == Absence::kBudgetExhausted) {
      out << "undecided: " << report.reason << '\n';
    } else {
      out << "no rainbow 1-factor: " << report.reason << '\n';
    }
    return kExitAbsent;
  }
  const FactorFile file = make_factor_file(*report.factor, coloring, &report);
  if (a.out == "-") {
    out << factor_to_json(file).dump() << '\n';
  } else {
    if (!a.out.empty()) write_text(a.out, factor_to_json(file).dump() + "\n");
    out << "rainbow 1-factor (" << to_string(report.solved_by) << "): "
        << edges_string(report.factor->edges) << '\n';
    if (report.certificate) out << "certificate: " << to_string(report.certificate->mode) << '\n';
  }
  return kExitOk;
}

// ---- verify ----

// Two overlapping edges, or a vertex nobody covers.
std::string factor_defect(const Params& params, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != params.n()) {
    return "has " + std::to_string(edges.size()) + " edges, expected " +
           std::to_string(params.n());
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].intersects(edges[j])) {
        return edges[i].to_string() + " and " + edges[j].to_string() + " overlap";
      }
    }
  }
  return "does not cover every vertex";
}

int cmd_verify(const std::string& in, const std::string& factor_path, std::ostream& out) {
  const Coloring coloring = read_coloring(in);
  std::optional<FactorFile> factor;
  if (!factor_path.empty()) factor = read_factor(factor_path);

  if (auto verdict = verify_proper(coloring); !verdict) {
    out << improper_message(coloring, verdict) << '\n';
    return kExitAbsent;
  }
  out << "ok: proper coloring of " << graph_name(coloring.params()) << " with "
      << coloring.color_count() << " colors\n";
  if (!factor) return kExitOk;

  if (!(factor->params == coloring.params())) {
    out << "factor is for " << graph_name(factor->params) << ", coloring is for "
        << graph_name(coloring.params()) << '\n';
    return kExitAbsent;
  }
  if (!verify_one_factor(factor->params, factor->edges)) {
    out << "not a 1-factor: " << factor_defect(factor->params, factor->edges) << '\n';
    return kExitAbsent;
  }
  for (std::size_t i = 0; i < factor->colors.size(); ++i) {
    const Color actual = coloring.color(factor->edges[i]);
    if (factor->colors[i] != actual) {
      out << "factor lists color " << factor->colors[i] << " for " << factor->edges[i].to_string()
          << " but the coloring has " << actual << '\n';
      return kExitAbsent;
    }
  }
  if (auto clash = rainbow_witness(factor->edges, coloring)) {
    out << "not rainbow: " << clash->first.to_string() << " and " << clash->second.to_string()
        << " both have color " << coloring.color(clash->first) << '\n';
    return kExitAbsent;
  }
  out << "ok: rainbow 1-factor " << edges_string(factor->edges) << '\n';
  return kExitOk;
}

// ---- enumerate ----

int cmd_enumerate(const std::string& in, bool as_json, std::ostream& out, std::ostream& err) {
  const Coloring coloring = read_coloring(in);
  if (auto verdict = verify_proper(coloring); !verdict) {
    err << improper_message(coloring, verdict) << '\n';
    return kExitUsage;
  }
  const OracleResult result = oracle_enumerate(coloring);
  if (as_json) {
    json doc = {{"r", coloring.params().r()},
                {"n", coloring.params().n()},
                {"total_factors", result.total_factors},
                {"rainbow_factors", result.rainbow_factors}};
    if (result.witness) {
      json w = json::array();
      for (const Edge& e : result.witness->edges) w.push_back(std::vector<Vertex>(e.begin(), e.end()));
      doc["witness"] = std::move(w);
    }
    out << doc.dump() << '\n';
  } else {
    out << result.rainbow_factors << " of " << result.total_factors << " factors rainbow\n";
    if (result.witness) out << "witness: " << edges_string(result.witness->edges) << '\n';
  }
  return result.rainbow_factors > 0 ? kExitOk : kExitAbsent;
}

// ---- fuzz ----

struct FuzzArgs {
  int r = 2;
  int n = 5;
  std::uint64_t iters = 100;
  std::optional<std::uint64_t> seed;
  int workers = 0;
  std::string mode = "mixed";
  std::string trace_out;
  bool as_json = false;
};

nlohmann::ordered_json summary_json(const FuzzConfig& config, const FuzzSummary& s) {
  return {{"r", config.params.r()},
          {"n", config.params.n()},
          {"mode", to_string(config.mode)},
          {"master_seed", config.master_seed},
          {"instances", s.instances},
          {"successes", s.successes},
          {"expected_negatives", s.expected_negatives},
          {"unexpected_absent", s.unexpected_absent},
          {"exhausted", s.exhausted},
          {"fallbacks", s.fallbacks},
          {"oracle_checked", s.oracle_checked},
          {"oracle_disagreements", s.oracle_disagreements},
          {"traces", s.traces},
          {"trace_violations", s.trace_violations},
          {"unaugmentable_pairs", s.unaugmentable_pairs},
          {"contradictions", s.contradictions},
          {"trivial_extensions", s.trivial_extensions},
          {"direct_paths", s.direct_paths},
          {"rotations", s.rotations},
          {"k3r_modes",
           {{"all_independent_distinct", s.k3r_modes[0]},
            {"direct_triple", s.k3r_modes[1]},
            {"fallback_triple", s.k3r_modes[2]}}},
          {"failures", s.failures}};
}

int cmd_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  FuzzConfig config;
  config.params = Params(a.r, a.n);
  config.iters = a.iters;
  config.master_seed = a.seed ? *a.seed : default_seed();
  config.workers = a.workers > 0 ? a.workers
                                 : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  config.mode = a.mode == "greedy"          ? FuzzMode::kGreedy
                : a.mode == "factorization" ? FuzzMode::kFactorization
                                            : FuzzMode::kMixed;

  std::ofstream trace_file;
  std::function<void(std::uint64_t, const AugmentationTrace&)> sink;
  if (!a.trace_out.empty()) {
    trace_file.open(a.trace_out, std::ios::trunc);
    if (!trace_file) throw ValidationError("cannot write " + a.trace_out);
    sink = [&](std::uint64_t i, const AugmentationTrace& t) {
      json line = trace_to_json(t);
      line["instance"] = i;
      trace_file << line.dump() << '\n';
    };
  }
  const FuzzSummary s = run_fuzz(config, sink);
  const auto doc = summary_json(config, s);
  if (a.as_json) {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : doc.items()) {
      if (key == "failures" || key == "k3r_modes") continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    if (a.r != 2 && a.n == 3) out << "k3r_modes: " << doc["k3r_modes"].dump() << '\n';
  }
  for (const std::string& f : s.failures) err << "failure: " << f << '\n';
  if (s.contradictions > 0) return kExitContradiction;
  return s.clean() ? kExitOk : kExitAbsent;
}

// ---- bench ----

struct BenchArgs {
  int r = 2;
  int n = 0;
  int reps = 5;
  std::optional<std::uint64_t> seed;
  std::string strategy = "least-color";
};

inline constexpr int kBenchMaxN = 2048;

double percentile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(v.size())));
  return v[std::max<std::size_t>(rank, 1) - 1];
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.r != 2) throw UsageError("bench runs the graph solver; --r must be 2");
  if (a.n < 3 || a.n > kBenchMaxN) {
    throw UsageError("bench needs 3 <= n <= " + std::to_string(kBenchMaxN));
  }
  if (a.reps < 1) throw UsageError("--reps must be at least 1");
  const std::uint64_t master = a.seed ? *a.seed : default_seed();
  const auto strategy =
      a.strategy == "random-feasible" ? GreedyStrategy::kRandomFeasible : GreedyStrategy::kLeastColor;
  const Params params(2, a.n);

  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  std::vector<double> gen_ms, solve_ms, total_ms;
  json runs = json::array();
  for (int i = 0; i < a.reps; ++i) {
    const std::uint64_t seed = derive_seed(master, static_cast<std::uint64_t>(i));
    const auto t0 = Clock::now();
    const Coloring coloring = gen_random_greedy(params, seed, strategy);
    const auto t1 = Clock::now();
    SolveOptions options;
    options.check_proper = false;
    const SolveReport report = solve_graph(coloring, options);
    const auto t2 = Clock::now();
    const bool verified = report.factor && verify_one_factor(params, report.factor->edges) &&
                          is_rainbow(report.factor->edges, coloring);
    if (!verified) throw TheoremContradiction("bench: unverified factor for seed " + std::to_string(seed));
    gen_ms.push_back(ms(t1 - t0));
    solve_ms.push_back(ms(t2 - t1));
    total_ms.push_back(ms(t2 - t0));
    runs.push_back({{"seed", seed},
                    {"colors", coloring.color_count()},
                    {"greedy_size", report.graph.greedy_size},
                    {"augmentations", report.graph.augment_calls},
                    {"gen_ms", gen_ms.back()},
                    {"solve_ms", solve_ms.back()},
                    {"total_ms", total_ms.back()},
                    {"verified", verified}});
  }
  auto summary = [&](const std::vector<double>& v) {
    return json{{"p50", percentile(v, 0.5)}, {"p90", percentile(v, 0.9)}, {"max", percentile(v, 1.0)}};
  };
  const json doc = {{"r", 2},
                    {"n", a.n},
                    {"reps", a.reps},
                    {"master_seed", master},
                    {"strategy", a.strategy},
                    {"gen_ms", summary(gen_ms)},
                    {"solve_ms", summary(solve_ms)},
                    {"total_ms", summary(total_ms)},
                    {"runs", std::move(runs)}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow 1-factors in properly edge-colored complete (hyper)graphs", "rainbow"};
  app.require_subcommand(1);
  const std::vector<std::string> strategies{"least-color", "random-feasible"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a proper coloring");
  gen_cmd->add_option("--kind", gen.kind, "Generator")
      ->check(CLI::IsMember({"round-robin", "backtrack", "random-greedy", "fixture"}));
  gen_cmd->add_option("--r", gen.r, "Edge size")->check(CLI::Range(2, 1 << 20));
  auto* gen_n = gen_cmd->add_option("--n", gen.n, "Edges per 1-factor")->check(CLI::Range(1, 1 << 20));
  gen_cmd->add_option("--seed", gen.seed, "Seed (default: RAINBOW_SEED or 0)");
  gen_cmd->add_option("--strategy", gen.strategy, "Greedy color choice")->check(CLI::IsMember(strategies));
  gen_cmd->add_option("--name", gen.name, "Fixture name");
  gen_cmd->add_option("--out", gen.out, "Output file (.csv for CSV, - for stdout)")->required();
  gen_cmd->add_flag("--force", gen.force, "Overwrite an existing file");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Find a rainbow 1-factor");
  solve_cmd->add_option("--in,in", solve_args.in, "Coloring file")->required();
  solve_cmd->add_option("--method", solve_args.method, "Solver")
      ->check(CLI::IsMember({"auto", "augment", "exhaustive", "k3r"}));
  solve_cmd->add_flag("--trace", solve_args.trace, "Record augmentation traces (JSON lines)");
  solve_cmd->add_option("--trace-out", solve_args.trace_out, "Trace destination");
  solve_cmd->add_option("--out", solve_args.out, "Factor file (- for stdout)");
  solve_cmd->add_flag("--force", solve_args.force, "Overwrite an existing factor file");
  solve_cmd->add_flag("--normalize", solve_args.normalize, "Renumber colors 0..C-1 on load");

  std::string verify_in, verify_factor;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring and optionally a factor");
  verify_cmd->add_option("--in,in", verify_in, "Coloring file")->required();
  verify_cmd->add_option("--factor", verify_factor, "Factor file");

  std::string enum_in;
  bool enum_json = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "Count all and rainbow 1-factors (small sizes)");
  enum_cmd->add_option("--in,in", enum_in, "Coloring file")->required();
  enum_cmd->add_flag("--json", enum_json, "Machine-readable output");

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded property run");
  fuzz_cmd->add_option("--r", fuzz.r, "Edge size")->check(CLI::Range(2, 1 << 20));
  fuzz_cmd->add_option("--n", fuzz.n, "Edges per 1-factor")->check(CLI::Range(1, 1 << 20));
  fuzz_cmd->add_option("--iters", fuzz.iters, "Instances");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Master seed (default: RAINBOW_SEED or 0)");
  fuzz_cmd->add_option("--workers", fuzz.workers, "Threads (default: all cores)")->check(CLI::Range(0, 1024));
  fuzz_cmd->add_option("--mode", fuzz.mode, "Generators")
      ->check(CLI::IsMember({"greedy", "factorization", "mixed"}));
  fuzz_cmd->add_option("--trace-out", fuzz.trace_out, "Write every trace as JSON lines");
  fuzz_cmd->add_flag("--json", fuzz.as_json, "Machine-readable summary");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time generation and solving on K_2n");
  bench_cmd->add_option("--r", bench.r, "Edge size (must be 2)");
  bench_cmd->add_option("--n", bench.n, "Half the vertex count")->required();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions");
  bench_cmd->add_option("--seed", bench.seed, "Master seed (default: RAINBOW_SEED or 0)");
  bench_cmd->add_option("--strategy", bench.strategy, "Greedy color choice")->check(CLI::IsMember(strategies));

  std::vector<std::string> argv_storage{"rainbow"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    err << e.what() << '\n' << (sub ? sub->help() : app.help());
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, gen_n->count() > 0, out);
    if (solve_cmd->parsed()) return cmd_solve(solve_args, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_in, verify_factor, out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_in, enum_json, out, err);
    if (fuzz_cmd->parsed()) return cmd_fuzz(fuzz, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
  } catch (const TheoremContradiction& e) {
    err << "THEOREM CONTRADICTION: " << e.what() << '\n';
    return kExitContradiction;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rainbow
