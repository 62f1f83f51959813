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

#include <algorithm>
#include <stdexcept>

#include "graph_state.hpp"
#include "rainbow/solver.hpp"
#include "solver_internal.hpp"
#include "trace_internal.hpp"

namespace rainbow {
namespace detail {
namespace {

// Direct paths s-a-b-end; applies the first rainbow swap.
bool try_direct(GraphState& state, Vertex s, Vertex end) {
  for (Vertex a = 0; a < state.vertex_count(); ++a) {
    if (a == s || !state.matched(a) || !state.is_free(state.color(s, a))) continue;
    const Vertex b = state.mate(a);
    if (state.swap_is_rainbow(s, a, b, end)) {
      state.remove(a, b);
      state.add(s, a);
      state.add(b, end);
      return true;
    }
  }
  return false;
}

// Rotation colors i for (s, t), ascending by color id, with their z_i.
std::vector<std::pair<Color, Vertex>> rotation_list(const GraphState& state, Vertex s, Vertex t) {
  const DenseColor base = state.color(s, t);
  Vertex base_u = -1, base_v = -1;
  if (!state.is_free(base)) {
    base_u = state.owner(base);
    base_v = state.mate(base_u);
  }
  std::vector<std::pair<Color, Vertex>> out;
  for (Vertex z = 0; z < state.vertex_count(); ++z) {
    if (z == t || z == base_u || z == base_v || !state.matched(z)) continue;
    const DenseColor c = state.color(t, z);
    if (state.is_free(c)) out.emplace_back(state.coloring().original(c), z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StepResult augment_step(GraphState& state, std::vector<AugmentationTrace>* traces) {
  StepResult result;
  if (auto ext = state.trivial_extension()) {
    state.add(ext->first, ext->second);
    result.route = AugmentRoute::kTrivialExtension;
    result.s = ext->first;
    result.t = ext->second;
    return result;
  }
  const auto free_vertices = state.unmatched();
  for (Vertex s : free_vertices) {
    for (Vertex t : free_vertices) {
      if (s == t) continue;
      ++result.pairs_examined;
      result.s = s;
      result.t = t;
      if (traces) traces->push_back(analyze_pair_unchecked(state, s, t));
      // s-a-b-t and t-b-a-s describe the same swap.
      if (s < t && try_direct(state, s, t)) {
        result.route = AugmentRoute::kDirectPath;
        return result;
      }
      for (const auto& [color, z] : rotation_list(state, s, t)) {
        const Vertex t_i = state.mate(z);
        state.remove(z, t_i);
        state.add(t, z);
        if (auto ext = state.trivial_extension()) {
          state.add(ext->first, ext->second);
          result.route = AugmentRoute::kRotation;
          result.rotation_color = color;
          return result;
        }
        if (try_direct(state, s, t_i)) {
          result.route = AugmentRoute::kRotation;
          result.rotation_color = color;
          return result;
        }
        state.remove(t, z);
        state.add(z, t_i);
      }
    }
  }
  result.route = AugmentRoute::kNone;
  return result;
}

}  // namespace detail

AugmentResult augment_once(const Coloring& coloring, const Matching& matching,
                           const AugmentOptions& options) {
  const Params& params = coloring.params();
  if (params.r() != 2) throw ValidationError("augment_once needs a graph (r = 2)");
  if (!(matching.params() == params)) throw ValidationError("matching/coloring size mismatch");
  if (auto verdict = verify_proper(coloring); !verdict) {
    throw ValidationError("coloring is not proper: " + verdict.witness->first.to_string() +
                          " and " + verdict.witness->second.to_string() + " share a color");
  }
  if (!matching.is_rainbow(coloring)) throw ValidationError("matching is not rainbow");
  if (static_cast<int>(matching.size()) >= params.n()) {
    throw ValidationError("matching is already perfect");
  }

  detail::GraphState state(coloring, matching);
  AugmentResult result;
  auto step = detail::augment_step(state, options.record_traces ? &result.traces : nullptr);
  result.route = step.route;
  result.pairs_examined = step.pairs_examined;
  if (step.route == AugmentRoute::kNone) {
    result.outcome = AugmentOutcome::kExhausted;
    return result;
  }
  result.outcome = AugmentOutcome::kAugmented;
  result.s = step.s;
  result.t = step.t;
  result.rotation_color = step.rotation_color;
  result.new_matching = state.to_matching();
  if (result.new_matching->size() != matching.size() + 1 ||
      !result.new_matching->is_rainbow(coloring)) {
    throw std::logic_error("augmentation produced an invalid matching");
  }
  return result;
}

SolveReport solve_graph(const Coloring& coloring, const SolveOptions& options) {
  const Params& params = coloring.params();
  if (params.r() != 2) throw ValidationError("solve_graph needs a graph (r = 2)");
  if (params.n() < 3) {
    throw ValidationError("solve_graph needs n >= 3; use the exhaustive method for smaller n");
  }
  if (options.check_proper) detail::require_proper(coloring);

  SolveReport report;
  const int n = params.n();
  if (n <= 4 && options.method != SolveMethod::kAugment) {
    OracleResult oracle = oracle_enumerate(coloring);
    if (!oracle.witness) {
      throw TheoremContradiction("no rainbow perfect matching in a proper coloring of K_" +
                                 std::to_string(2 * n));
    }
    report.factor = oracle.witness;
    report.solved_by = SolvedBy::kOracle;
    report.oracle = std::move(oracle);
    detail::verify_factor(report, coloring);
    return report;
  }

  detail::GraphState state(coloring, greedy_rainbow_matching(coloring));
  report.graph.greedy_size = state.size();
  while (state.size() < n) {
    auto* sink = options.record_traces ? &report.traces : nullptr;
    const auto step = detail::augment_step(state, sink);
    ++report.graph.augment_calls;
    switch (step.route) {
      case AugmentRoute::kTrivialExtension:
        ++report.graph.trivial_extensions;
        continue;
      case AugmentRoute::kDirectPath:
        ++report.graph.direct_paths;
        break;
      case AugmentRoute::kRotation:
        ++report.graph.rotations;
        break;
      case AugmentRoute::kNone:
        break;
    }
    if (step.route != AugmentRoute::kNone) {
      if (step.pairs_examined > 1) ++report.graph.later_pairs;
      continue;
    }

    ++report.graph.exhausted;
    std::vector<AugmentationTrace> failure;
    if (options.record_traces) {
      failure.assign(report.traces.end() - step.pairs_examined, report.traces.end());
    } else {
      detail::GraphState copy = state;
      detail::augment_step(copy, &failure);
    }
    const std::string what = "augmentation exhausted at k = " + std::to_string(state.size()) +
                             " < n = " + std::to_string(n);
    if (2 * n <= kExhaustiveVertexCap) {
      if (auto factor = exhaustive_rainbow_factor(coloring)) {
        ++report.graph.fallbacks;
        report.factor = std::move(factor);
        report.solved_by = SolvedBy::kExhaustive;
        if (!options.record_traces) {
          report.traces.insert(report.traces.end(), failure.begin(), failure.end());
        }
        detail::verify_factor(report, coloring);
        return report;
      }
      throw AugmentationContradiction(what + "; exhaustive search found no rainbow factor",
                                      std::move(failure));
    }
    throw AugmentationContradiction(what, std::move(failure));
  }

  const Matching matching = state.to_matching();
  report.factor = OneFactor{params, {matching.edges().begin(), matching.edges().end()}};
  report.solved_by = SolvedBy::kAugmentation;
  detail::verify_factor(report, coloring);
  return report;
}

}  // namespace rainbow
