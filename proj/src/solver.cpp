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

#include "rainbow/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "rainbow/random.hpp"
#include "solver_internal.hpp"

namespace rainbow {
namespace detail {

void require_proper(const Coloring& coloring) {
  if (auto verdict = verify_proper(coloring); !verdict) {
    throw ValidationError("coloring is not proper: " + verdict.witness->first.to_string() +
                          " and " + verdict.witness->second.to_string() + " share a color");
  }
}

void verify_factor(const SolveReport& report, const Coloring& coloring) {
  if (!report.factor) return;
  if (!verify_one_factor(coloring.params(), report.factor->edges) ||
      !is_rainbow(report.factor->edges, coloring)) {
    throw std::logic_error("solver returned something that is not a rainbow 1-factor");
  }
}

}  // namespace detail

namespace {

// Edges as vertex masks, bucketed by smallest vertex, for <= 64 vertices.
class MaskedHypergraph {
 public:
  explicit MaskedHypergraph(const Coloring& coloring) : params_(coloring.params()) {
    const int vc = params_.vertex_count();
    full_ = vc == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vc) - 1;
    by_min_.resize(vc);
    for_each_edge(params_, [&](EdgeRank e, std::span<const Vertex> vs) {
      std::uint64_t mask = 0;
      for (Vertex v : vs) mask |= std::uint64_t{1} << v;
      masks_.push_back(mask);
      colors_.push_back(coloring.dense(e));
      by_min_[vs[0]].push_back(e);
    });
  }

  // Calls visit(chosen) for every 1-factor; stops when it returns true.
  // keep(chosen, e) may prune an extension.
  template <typename Keep, typename Visit>
  bool enumerate(Keep&& keep, Visit&& visit) const {
    std::vector<EdgeRank> chosen;
    return walk(0, chosen, keep, visit);
  }

  DenseColor color(EdgeRank e) const { return colors_[e]; }

  OneFactor to_factor(const std::vector<EdgeRank>& chosen) const {
    OneFactor factor{params_, {}};
    for (EdgeRank e : chosen) factor.edges.push_back(unrank_edge(e, params_));
    return factor;
  }

 private:
  template <typename Keep, typename Visit>
  bool walk(std::uint64_t covered, std::vector<EdgeRank>& chosen, Keep& keep,
            Visit& visit) const {
    if (covered == full_) return visit(chosen);
    const int v = std::countr_zero(~covered);
    for (EdgeRank e : by_min_[v]) {
      if ((masks_[e] & covered) != 0 || !keep(chosen, e)) continue;
      chosen.push_back(e);
      if (walk(covered | masks_[e], chosen, keep, visit)) return true;
      chosen.pop_back();
    }
    return false;
  }

  Params params_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<DenseColor> colors_;
  std::vector<std::vector<EdgeRank>> by_min_;
};

// Two-edge exchange local search minimizing repeated colors. Restart 0
// starts from the colex greedy matching completed arbitrarily; later ones
// from a seeded random partition.
std::optional<std::vector<Edge>> local_search(const Coloring& coloring, int restarts,
                                              std::uint64_t seed) {
  const Params& params = coloring.params();
  const int r = params.r();
  const int n = params.n();
  const int vc = params.vertex_count();

  // Splits of 2r positions: masks holding bit 0 with r bits set.
  std::vector<std::uint64_t> splits;
  for_each_edge(Params(r, 2), [&](EdgeRank, std::span<const Vertex> pos) {
    if (pos[0] != 0) return;
    std::uint64_t mask = 0;
    for (Vertex p : pos) mask |= std::uint64_t{1} << p;
    splits.push_back(mask);
  });

  std::vector<int> count(coloring.color_count(), 0);
  auto color_of = [&](const std::vector<Vertex>& block) {
    return coloring.dense(rank_edge(Edge(block), params));
  };

  for (int restart = 0; restart < restarts; ++restart) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    std::vector<std::vector<Vertex>> blocks;
    if (restart == 0) {
      const Matching greedy = greedy_rainbow_matching(coloring);
      for (const Edge& e : greedy.edges()) blocks.emplace_back(e.begin(), e.end());
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < vc; ++v) {
        if (!greedy.covers(v)) rest.push_back(v);
      }
      for (std::size_t i = 0; i < rest.size(); i += r) {
        blocks.emplace_back(rest.begin() + i, rest.begin() + i + r);
      }
    } else {
      std::vector<Vertex> perm(vc);
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(std::span<Vertex>(perm));
      for (int i = 0; i < n; ++i) blocks.emplace_back(perm.begin() + i * r, perm.begin() + (i + 1) * r);
    }
    for (auto& block : blocks) std::sort(block.begin(), block.end());

    std::fill(count.begin(), count.end(), 0);
    std::vector<DenseColor> colors(n);
    int collisions = 0;
    for (int i = 0; i < n; ++i) {
      colors[i] = color_of(blocks[i]);
      if (count[colors[i]]++ > 0) ++collisions;
    }

    const int max_steps = 100 * n * r;
    for (int step = 0; step < max_steps && collisions > 0; ++step) {
      std::vector<int> conflicted;
      for (int i = 0; i < n; ++i) {
        if (count[colors[i]] > 1) conflicted.push_back(i);
      }
      const int i = conflicted[rng.below(conflicted.size())];

      int best_delta = 1 << 30;
      std::uint64_t ties = 0;
      int best_j = -1;
      std::vector<Vertex> best_a, best_b;
      DenseColor best_ca = 0, best_cb = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        std::vector<Vertex> pool(blocks[i]);
        pool.insert(pool.end(), blocks[j].begin(), blocks[j].end());
        --count[colors[i]];
        --count[colors[j]];
        const int before = (count[colors[i]] >= 1) + (count[colors[j]] + (colors[i] == colors[j]) >= 1);
        for (std::uint64_t split : splits) {
          std::vector<Vertex> a, b;
          for (int p = 0; p < 2 * r; ++p) ((split >> p) & 1 ? a : b).push_back(pool[p]);
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          const DenseColor ca = color_of(a);
          const DenseColor cb = color_of(b);
          const int after = (count[ca] >= 1) + (count[cb] + (ca == cb) >= 1);
          const int delta = after - before;
          if (delta < best_delta) {
            best_delta = delta;
            ties = 1;
          } else if (delta == best_delta) {
            ++ties;
            if (rng.below(ties) != 0) continue;
          } else {
            continue;
          }
          best_j = j;
          best_a = std::move(a);
          best_b = std::move(b);
          best_ca = ca;
          best_cb = cb;
        }
        ++count[colors[i]];
        ++count[colors[j]];
      }
      if (best_j < 0 || best_delta > 0) break;
      --count[colors[i]];
      --count[colors[best_j]];
      blocks[i] = std::move(best_a);
      blocks[best_j] = std::move(best_b);
      colors[i] = best_ca;
      colors[best_j] = best_cb;
      ++count[best_ca];
      ++count[best_cb];
      collisions += best_delta;
    }
    if (collisions == 0) {
      std::vector<Edge> factor;
      for (auto& block : blocks) factor.emplace_back(std::move(block));
      return factor;
    }
  }
  return std::nullopt;
}

void require_oracle_size(const Params& params, int cap) {
  if (params.vertex_count() > cap) {
    throw CapacityError("exhaustive search is limited to " + std::to_string(cap) +
                        " vertices, instance has " + std::to_string(params.vertex_count()));
  }
}

}  // namespace

Matching greedy_rainbow_matching(const Coloring& coloring) {
  const Params& params = coloring.params();
  Matching matching(params);
  std::vector<bool> used(coloring.color_count(), false);
  std::vector<Vertex> buffer(params.r());
  for_each_edge(params, [&](EdgeRank e, std::span<const Vertex> vs) {
    if (used[coloring.dense(e)]) return;
    for (Vertex v : vs) {
      if (matching.covers(v)) return;
    }
    used[coloring.dense(e)] = true;
    matching.add(Edge(std::vector<Vertex>(vs.begin(), vs.end())));
  });
  return matching;
}

Matching greedy_rainbow_matching(const Coloring& coloring, std::span<const EdgeRank> order) {
  const Params& params = coloring.params();
  Matching matching(params);
  std::vector<bool> used(coloring.color_count(), false);
  for (EdgeRank e : order) {
    if (e >= params.edge_count()) throw ValidationError("edge rank out of range");
    if (used[coloring.dense(e)]) continue;
    Edge edge = unrank_edge(e, params);
    if (!matching.disjoint_from(edge)) continue;
    used[coloring.dense(e)] = true;
    matching.add(std::move(edge));
  }
  return matching;
}

bool is_maximal_rainbow(const Coloring& coloring, const Matching& matching) {
  std::vector<bool> used(coloring.color_count(), false);
  for (DenseColor c : matching.used_colors(coloring)) used[c] = true;
  bool maximal = true;
  for_each_edge(coloring.params(), [&](EdgeRank e, std::span<const Vertex> vs) {
    if (!maximal || used[coloring.dense(e)]) return;
    for (Vertex v : vs) {
      if (matching.covers(v)) return;
    }
    maximal = false;
  });
  return maximal;
}

OracleResult oracle_enumerate(const Coloring& coloring) {
  require_oracle_size(coloring.params(), kOracleVertexCap);
  const MaskedHypergraph graph(coloring);
  OracleResult result;
  std::vector<DenseColor> seen;
  graph.enumerate([](const std::vector<EdgeRank>&, EdgeRank) { return true; },
                  [&](const std::vector<EdgeRank>& chosen) {
                    ++result.total_factors;
                    seen.clear();
                    for (EdgeRank e : chosen) seen.push_back(graph.color(e));
                    std::sort(seen.begin(), seen.end());
                    if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) {
                      ++result.rainbow_factors;
                      if (!result.witness) result.witness = graph.to_factor(chosen);
                    }
                    return false;
                  });
  return result;
}

std::optional<OneFactor> exhaustive_rainbow_factor(const Coloring& coloring) {
  require_oracle_size(coloring.params(), kExhaustiveVertexCap);
  const MaskedHypergraph graph(coloring);
  std::optional<OneFactor> found;
  graph.enumerate(
      [&](const std::vector<EdgeRank>& chosen, EdgeRank e) {
        for (EdgeRank c : chosen) {
          if (graph.color(c) == graph.color(e)) return false;
        }
        return true;
      },
      [&](const std::vector<EdgeRank>& chosen) {
        found = graph.to_factor(chosen);
        return true;
      });
  return found;
}

SolveReport solve(const Coloring& coloring, const SolveOptions& options) {
  const Params& params = coloring.params();
  if (options.check_proper) detail::require_proper(coloring);
  SolveOptions inner = options;
  inner.check_proper = false;

  SolveReport report;
  switch (options.method) {
    case SolveMethod::kExhaustive:
      if (params.vertex_count() <= kOracleVertexCap) {
        report.oracle = oracle_enumerate(coloring);
        report.factor = report.oracle->witness;
        report.solved_by = SolvedBy::kOracle;
        if (!report.factor) {
          report.absence = Absence::kVerifiedAbsent;
          report.reason = std::to_string(report.oracle->rainbow_factors) + " of " +
                          std::to_string(report.oracle->total_factors) + " factors rainbow";
        }
      } else {
        report.factor = exhaustive_rainbow_factor(coloring);
        report.solved_by = SolvedBy::kExhaustive;
        if (!report.factor) {
          report.absence = Absence::kVerifiedAbsent;
          report.reason = "exhaustive search found no rainbow factor";
        }
      }
      detail::verify_factor(report, coloring);
      return report;
    case SolveMethod::kK3r: {
      auto [factor, cert] = solve_k3r(coloring);
      report.factor = std::move(factor);
      report.certificate = std::move(cert);
      report.solved_by = SolvedBy::kK3r;
      detail::verify_factor(report, coloring);
      return report;
    }
    case SolveMethod::kAugment:
      if (params.r() != 2) throw ValidationError("method augment needs r = 2");
      return solve_graph(coloring, inner);
    case SolveMethod::kAuto:
      break;
  }

  const int n = params.n();
  if (n == 1) {
    std::vector<Vertex> all(params.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    report.factor = OneFactor{params, {Edge(std::move(all))}};
    report.solved_by = SolvedBy::kDirect;
  } else if (n == 2) {
    // Every factor is an edge through vertex 0 and its complement.
    std::uint64_t total = 0;
    std::vector<Vertex> other;
    for_each_edge(params, [&](EdgeRank e, std::span<const Vertex> vs) {
      if (vs[0] != 0) return;
      ++total;
      if (report.factor) return;
      other.clear();
      for (Vertex v = 0, i = 0; v < params.vertex_count(); ++v) {
        if (i < params.r() && vs[i] == v) {
          ++i;
        } else {
          other.push_back(v);
        }
      }
      const Edge complement(other);
      if (coloring.dense(e) != coloring.dense(complement)) {
        report.factor = OneFactor{params, {Edge(std::vector<Vertex>(vs.begin(), vs.end())),
                                           complement}};
      }
    });
    report.solved_by = SolvedBy::kDirect;
    if (!report.factor) {
      report.absence = Absence::kVerifiedAbsent;
      report.reason = "0 of " + std::to_string(total) + " factors rainbow";
    }
  } else if (params.r() == 2) {
    return solve_graph(coloring, inner);
  } else if (n == 3) {
    auto [factor, cert] = solve_k3r(coloring);
    report.factor = std::move(factor);
    report.certificate = std::move(cert);
    report.solved_by = SolvedBy::kK3r;
  } else {
    if (auto factor = local_search(coloring, options.local_search_restarts, options.seed)) {
      report.factor = OneFactor{params, std::move(*factor)};
      report.solved_by = SolvedBy::kLocalSearch;
    } else if (params.vertex_count() <= kOracleVertexCap) {
      report.factor = exhaustive_rainbow_factor(coloring);
      report.solved_by = SolvedBy::kExhaustive;
      if (!report.factor) {
        throw TheoremContradiction("no rainbow 1-factor in a proper coloring of K_" +
                                   std::to_string(params.vertex_count()) + "^(" +
                                   std::to_string(params.r()) + ")");
      }
    } else {
      report.absence = Absence::kBudgetExhausted;
      report.reason = "local search budget exhausted (not a proof of absence)";
    }
  }
  detail::verify_factor(report, coloring);
  return report;
}

const char* to_string(AugmentRoute route) {
  switch (route) {
    case AugmentRoute::kNone:
      return "none";
    case AugmentRoute::kTrivialExtension:
      return "trivial_extension";
    case AugmentRoute::kDirectPath:
      return "direct_path";
    case AugmentRoute::kRotation:
      return "rotation";
  }
  return "?";
}

const char* to_string(K3rMode mode) {
  switch (mode) {
    case K3rMode::kAllIndependentDistinct:
      return "all_independent_distinct";
    case K3rMode::kDirectTriple:
      return "direct_triple";
    case K3rMode::kFallbackTriple:
      return "fallback_triple";
  }
  return "?";
}

const char* to_string(SolvedBy by) {
  switch (by) {
    case SolvedBy::kNone:
      return "none";
    case SolvedBy::kOracle:
      return "oracle";
    case SolvedBy::kAugmentation:
      return "augmentation";
    case SolvedBy::kK3r:
      return "k3r";
    case SolvedBy::kLocalSearch:
      return "local_search";
    case SolvedBy::kExhaustive:
      return "exhaustive";
    case SolvedBy::kDirect:
      return "direct";
  }
  return "?";
}

}  // namespace rainbow
