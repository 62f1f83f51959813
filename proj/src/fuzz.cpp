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

#include "rainbow/fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <thread>

#include "rainbow/gen.hpp"
#include "rainbow/random.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {
namespace {

struct Outcome {
  bool success = false;
  bool expected_negative = false;
  bool unexpected_absent = false;
  bool oracle_checked = false;
  bool oracle_disagrees = false;
  bool contradiction = false;
  GraphSolveStats graph;
  std::optional<K3rMode> k3r_mode;
  std::uint64_t traces = 0;
  std::uint64_t trace_violations = 0;
  std::uint64_t unaugmentable_pairs = 0;
  std::vector<AugmentationTrace> kept_traces;
  std::string failure;
};

bool use_factorization(const FuzzConfig& config, std::uint64_t index) {
  switch (config.mode) {
    case FuzzMode::kGreedy:
      return false;
    case FuzzMode::kFactorization:
      return true;
    case FuzzMode::kMixed:
      return index % 2 == 1;
  }
  return false;
}

Coloring base_factorization(const Params& params) {
  if (params.n() == 1) return gen_fixture("all-distinct", params);
  if (params.r() == 2) return gen_round_robin(params.n());
  return gen_backtrack_factorization(params);
}

// Random vertex relabeling plus a random relabeling of the color ids.
Coloring scramble(const Coloring& base, std::uint64_t seed) {
  const Params& params = base.params();
  Rng rng(seed);
  std::vector<Vertex> perm(params.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<Vertex>(perm));
  const Coloring moved = permute_vertices(base, perm);

  std::vector<Color> ids(moved.color_count());
  std::iota(ids.begin(), ids.end(), Color{0});
  rng.shuffle(std::span<Color>(ids));
  std::vector<Color> colors(params.edge_count());
  for (EdgeRank e = 0; e < params.edge_count(); ++e) colors[e] = ids[moved.dense(e)];
  return Coloring(params, std::move(colors));
}

Coloring make_instance(const FuzzConfig& config, std::uint64_t index, const Coloring* base) {
  const std::uint64_t seed = derive_seed(config.master_seed, index);
  if (use_factorization(config, index)) {
    if (base) return scramble(*base, seed);
    return scramble(base_factorization(config.params), seed);
  }
  const auto strategy = (seed >> 7) & 1 ? GreedyStrategy::kRandomFeasible
                                        : GreedyStrategy::kLeastColor;
  return gen_random_greedy(config.params, seed, strategy);
}

Outcome run_instance(const FuzzConfig& config, std::uint64_t index, const Coloring* base,
                     bool keep_traces) {
  Outcome out;
  const Coloring coloring = make_instance(config, index, base);
  const Params& params = coloring.params();
  auto fail = [&](const std::string& what) {
    if (out.failure.empty()) {
      out.failure = "instance " + std::to_string(index) + " (seed " +
                    std::to_string(derive_seed(config.master_seed, index)) + "): " + what;
    }
  };

  SolveOptions options;
  options.record_traces = config.record_traces;
  options.check_proper = false;  // generators already verify
  options.seed = derive_seed(config.master_seed, index);
  std::optional<SolveReport> report;
  try {
    report = solve(coloring, options);
  } catch (const AugmentationContradiction& e) {
    out.contradiction = true;
    fail(e.what());
    for (const AugmentationTrace& t : e.traces()) {
      ++out.traces;
      if (!check_counting(t).violations.empty()) ++out.trace_violations;
      if (keep_traces) out.kept_traces.push_back(t);
    }
    return out;
  } catch (const TheoremContradiction& e) {
    out.contradiction = true;
    fail(e.what());
    return out;
  }

  out.graph = report->graph;
  if (report->certificate) out.k3r_mode = report->certificate->mode;
  if (report->factor) {
    if (verify_one_factor(params, report->factor->edges) &&
        is_rainbow(report->factor->edges, coloring)) {
      out.success = true;
    } else {
      out.contradiction = true;
      fail("solver returned an unverified factor");
    }
  } else if (params.n() <= 2 && report->absence == Absence::kVerifiedAbsent) {
    out.expected_negative = true;
  } else {
    out.unexpected_absent = true;
    fail("no factor: " + report->reason);
  }
  if (out.graph.exhausted > 0) fail("augmentation exhausted");

  if (params.vertex_count() <= kOracleVertexCap) {
    out.oracle_checked = true;
    const OracleResult oracle = report->oracle ? *report->oracle : oracle_enumerate(coloring);
    if ((oracle.rainbow_factors > 0) != report->factor.has_value()) {
      out.oracle_disagrees = true;
      fail("oracle counts " + std::to_string(oracle.rainbow_factors) + " rainbow factors");
    }
  }

  for (const AugmentationTrace& t : report->traces) {
    ++out.traces;
    const CountingCheck check = check_counting(t);
    if (!check.violations.empty()) {
      ++out.trace_violations;
      fail("trace (" + std::to_string(t.s) + "," + std::to_string(t.t) + "): " +
           check.violations.front());
    }
    if (!t.any_augmentation()) ++out.unaugmentable_pairs;
  }
  if (keep_traces) out.kept_traces = std::move(report->traces);
  return out;
}

}  // namespace

Coloring fuzz_instance(const FuzzConfig& config, std::uint64_t index) {
  return make_instance(config, index, nullptr);
}

FuzzSummary run_fuzz(const FuzzConfig& config,
                     const std::function<void(std::uint64_t, const AugmentationTrace&)>& trace_sink) {
  if (config.workers < 1) throw ValidationError("workers must be >= 1");

  // The backtracking factorizer is deterministic, so one copy serves every
  // factorization instance.
  std::optional<Coloring> base;
  if (config.mode != FuzzMode::kGreedy && config.iters > 0) {
    base = base_factorization(config.params);
  }
  const Coloring* base_ptr = base ? &*base : nullptr;

  const std::uint64_t iters = config.iters;
  std::vector<Outcome> outcomes(iters);
  const auto workers = static_cast<std::uint64_t>(
      std::min<std::uint64_t>(config.workers, std::max<std::uint64_t>(iters, 1)));
  const bool keep = static_cast<bool>(trace_sink);
  auto work = [&](std::uint64_t w) {
    const std::uint64_t lo = iters * w / workers;
    const std::uint64_t hi = iters * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      outcomes[i] = run_instance(config, i, base_ptr, keep);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }

  FuzzSummary s;
  for (std::uint64_t i = 0; i < iters; ++i) {
    const Outcome& o = outcomes[i];
    ++s.instances;
    s.successes += o.success;
    s.expected_negatives += o.expected_negative;
    s.unexpected_absent += o.unexpected_absent;
    s.oracle_checked += o.oracle_checked;
    s.oracle_disagreements += o.oracle_disagrees;
    s.contradictions += o.contradiction;
    s.exhausted += o.graph.exhausted;
    s.fallbacks += o.graph.fallbacks;
    s.trivial_extensions += o.graph.trivial_extensions;
    s.direct_paths += o.graph.direct_paths;
    s.rotations += o.graph.rotations;
    s.traces += o.traces;
    s.trace_violations += o.trace_violations;
    s.unaugmentable_pairs += o.unaugmentable_pairs;
    if (o.k3r_mode) ++s.k3r_modes[static_cast<std::size_t>(*o.k3r_mode)];
    if (!o.failure.empty() && s.failures.size() < kMaxReportedFailures) {
      s.failures.push_back(o.failure);
    }
    if (trace_sink) {
      for (const AugmentationTrace& t : o.kept_traces) trace_sink(i, t);
    }
  }
  return s;
}

const char* to_string(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::kGreedy:
      return "greedy";
    case FuzzMode::kFactorization:
      return "factorization";
    case FuzzMode::kMixed:
      return "mixed";
  }
  return "?";
}

}  // namespace rainbow
