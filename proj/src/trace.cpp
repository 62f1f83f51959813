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

#include "rainbow/trace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "graph_state.hpp"
#include "trace_internal.hpp"

namespace rainbow {
namespace detail {
namespace {

CandidatePath make_path(const GraphState& state, Vertex s, Vertex a, Vertex b, Vertex end) {
  const Coloring& coloring = state.coloring();
  CandidatePath path;
  path.s = s;
  path.a = a;
  path.b = b;
  path.end = end;
  const DenseColor first = state.color(s, a);
  const DenseColor third = state.color(b, end);
  path.first_color = coloring.original(first);
  path.third_color = coloring.original(third);
  path.symmetric = first == third;
  path.augmenting = state.swap_is_rainbow(s, a, b, end);
  return path;
}

// Candidate paths s-a-b-end relative to the current matching.
void collect_candidates(const GraphState& state, Vertex s, Vertex end,
                        std::vector<CandidatePath>& out, std::size_t& symmetric,
                        std::size_t& augmenting) {
  for (Vertex a = 0; a < state.vertex_count(); ++a) {
    if (a == s || !state.matched(a) || !state.is_free(state.color(s, a))) continue;
    const Vertex b = state.mate(a);
    if (b == end) continue;
    out.push_back(make_path(state, s, a, b, end));
    symmetric += out.back().symmetric;
    augmenting += out.back().augmenting;
  }
}

void split_colors(const GraphState& state, Vertex v, std::vector<Color>& inside,
                  std::vector<Color>& outside) {
  const Coloring& coloring = state.coloring();
  for (Vertex u = 0; u < state.vertex_count(); ++u) {
    if (u == v) continue;
    const DenseColor c = state.color(v, u);
    (state.is_free(c) ? outside : inside).push_back(coloring.original(c));
  }
  std::sort(inside.begin(), inside.end());
  std::sort(outside.begin(), outside.end());
}

}  // namespace

AugmentationTrace analyze_pair_unchecked(GraphState& state, Vertex s, Vertex t) {
  const Coloring& coloring = state.coloring();
  AugmentationTrace trace;
  const int n = state.vertex_count() / 2;
  trace.n = n;
  trace.k = state.size();
  trace.s = s;
  trace.t = t;
  const DenseColor base = state.color(s, t);
  trace.base_color = coloring.original(base);
  trace.base_color_matched = !state.is_free(base);

  split_colors(state, s, trace.c1, trace.c2);
  split_colors(state, t, trace.c1_t, trace.c2_t);
  trace.p = static_cast<int>(trace.c1.size());
  trace.q = static_cast<int>(trace.c1_t.size());

  collect_candidates(state, s, t, trace.candidates, trace.symmetric_count,
                     trace.augmenting_count);

  // Rotation colors: F(M)-edges {t, z} with z matched and off the
  // base-colored matching edge.
  Vertex base_u = -1, base_v = -1;
  if (trace.base_color_matched) {
    base_u = state.owner(base);
    base_v = state.mate(base_u);
  }
  std::vector<std::pair<Color, Vertex>> rotations;
  for (Vertex z = 0; z < state.vertex_count(); ++z) {
    if (z == t || !state.matched(z)) continue;
    const DenseColor c = state.color(t, z);
    if (!state.is_free(c)) continue;
    if (z == base_u || z == base_v) {
      trace.excluded.push_back(coloring.original(c));
    } else {
      rotations.emplace_back(coloring.original(c), z);
    }
  }
  std::sort(trace.excluded.begin(), trace.excluded.end());
  std::sort(rotations.begin(), rotations.end());

  for (const auto& [color, z] : rotations) {
    trace.rotation_colors.push_back(color);
    RotationInventory rot;
    rot.color = color;
    rot.z = z;
    rot.t_i = state.mate(z);
    rot.e_i_color = coloring.original(state.color(z, rot.t_i));

    state.remove(z, rot.t_i);
    state.add(t, z);
    for (Vertex v = 0; v < state.vertex_count(); ++v) {
      if (v != s && state.is_free(state.color(s, v))) ++rot.free_first_edges;
    }
    rot.trivial_extension = state.trivial_extension().has_value();
    collect_candidates(state, s, rot.t_i, rot.candidates, rot.symmetric_count,
                       rot.augmenting_count);
    state.remove(t, z);
    state.add(z, rot.t_i);

    trace.rotations.push_back(std::move(rot));
  }

  trace.x = 2 * n - trace.p;
  trace.y = 2 * n - trace.q;
  const long lhs = 2L * n - trace.p - 1;
  const long rhs = (2L * n - trace.q - 3) * (2L * n - trace.p - trace.k);
  trace.inequality_holds = lhs >= rhs;
  return trace;
}

}  // namespace detail

bool AugmentationTrace::any_augmentation() const {
  if (augmenting_count > 0) return true;
  return std::any_of(rotations.begin(), rotations.end(), [](const RotationInventory& r) {
    return r.trivial_extension || r.augmenting_count > 0;
  });
}

AugmentationTrace analyze_pair(const Coloring& coloring, const Matching& matching, Vertex s,
                               Vertex t) {
  const Params& params = coloring.params();
  if (params.r() != 2) throw ValidationError("analyze_pair needs a graph (r = 2)");
  if (!(matching.params() == params)) throw ValidationError("matching/coloring size mismatch");
  if (auto verdict = verify_proper(coloring); !verdict) {
    throw ValidationError("coloring is not proper");
  }
  if (!matching.is_rainbow(coloring)) throw ValidationError("matching is not rainbow");
  const int vc = params.vertex_count();
  if (s < 0 || s >= vc || t < 0 || t >= vc || s == t) {
    throw ValidationError("s and t must be two distinct vertices");
  }
  if (matching.covers(s) || matching.covers(t)) {
    throw ValidationError("s and t must be unmatched");
  }
  detail::GraphState state(coloring, matching);
  if (state.trivial_extension()) {
    throw ValidationError("matching is not maximal: a disjoint edge has an unused color");
  }
  return detail::analyze_pair_unchecked(state, s, t);
}

CountingCheck check_counting(const AugmentationTrace& trace) {
  CountingCheck check;
  auto fail = [&](std::string what) { check.violations.push_back(std::move(what)); };
  const long n = trace.n;
  const long p = trace.p;
  const long k = trace.k;

  if (static_cast<long>(trace.c1.size() + trace.c2.size()) != 2 * n - 1) {
    fail("|C1|+|C2| != 2n-1");
  }
  if (static_cast<long>(trace.c1_t.size() + trace.c2_t.size()) != 2 * n - 1) {
    fail("|C1'|+|C2'| != 2n-1");
  }
  if (!trace.base_color_matched) fail("base color not in C(M)");
  if (trace.excluded.size() > 2) fail("more than 2 excluded rotation colors");
  if (static_cast<long>(trace.candidates.size()) != 2 * n - 1 - p) {
    fail("base candidate count " + std::to_string(trace.candidates.size()) + " != 2n-1-p = " +
         std::to_string(2 * n - 1 - p));
  }
  if (trace.augmenting_count == 0 && static_cast<long>(trace.symmetric_count) < 2 * n - p - k) {
    fail("symmetric count " + std::to_string(trace.symmetric_count) + " < 2n-p-k = " +
         std::to_string(2 * n - p - k));
  }

  for (const RotationInventory& rot : trace.rotations) {
    const std::string tag = "rotation " + std::to_string(rot.color) + ": ";
    if (rot.e_i_color == trace.base_color) fail(tag + "C(e_i) equals the base color");
    const long expect = 2 * n - 1 - p;
    if (std::labs(static_cast<long>(rot.free_first_edges) - expect) > 1) {
      fail(tag + "|C(s) ∩ F(M_i)| not within 1 of 2n-1-p");
    }
    if (!rot.trivial_extension) {
      const long count = static_cast<long>(rot.candidates.size());
      if (std::labs(count - expect) > 1) {
        fail(tag + "candidate count " + std::to_string(count) + " not within 1 of 2n-1-p");
      }
      if (rot.augmenting_count == 0 && static_cast<long>(rot.symmetric_count) < count - (k - 1)) {
        fail(tag + "symmetric count below candidates-(k-1)");
      }
    }
  }

  // Injectivity of first-edge colors over all symmetric paths.
  const std::set<Color> c2(trace.c2.begin(), trace.c2.end());
  std::map<std::pair<EdgeRank, EdgeRank>, Color> paths;
  auto collect = [&](const std::vector<CandidatePath>& list) {
    for (const CandidatePath& path : list) {
      if (!path.symmetric) continue;
      EdgeRank first = pair_rank(path.s, path.a);
      EdgeRank third = pair_rank(path.b, path.end);
      if (first > third) std::swap(first, third);
      paths.emplace(std::make_pair(first, third), path.first_color);
      if (!c2.count(path.first_color)) {
        fail("symmetric path first color " + std::to_string(path.first_color) + " not in C2");
      }
    }
  };
  collect(trace.candidates);
  for (const RotationInventory& rot : trace.rotations) collect(rot.candidates);
  std::set<Color> starts;
  for (const auto& [key, color] : paths) {
    if (!starts.insert(color).second) check.injective = false;
  }
  if (!check.injective) fail("two symmetric paths share a first-edge color");

  check.lhs = 2 * n - p - 1;
  check.rhs = (2 * n - trace.q - 3) * (2 * n - p - k);
  if (!check.violations.empty()) {
    check.verdict = CountingVerdict::kInconsistent;
  } else if (check.lhs < check.rhs) {
    check.verdict = CountingVerdict::kAugmentableGuaranteed;
  } else {
    check.verdict = CountingVerdict::kInequalityViolatedByProof;
  }
  return check;
}

const char* to_string(CountingVerdict verdict) {
  switch (verdict) {
    case CountingVerdict::kAugmentableGuaranteed:
      return "augmentable_guaranteed";
    case CountingVerdict::kInequalityViolatedByProof:
      return "inequality_violated_by_proof";
    case CountingVerdict::kInconsistent:
      return "inconsistent";
  }
  return "?";
}

}  // namespace rainbow
