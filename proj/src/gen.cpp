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

#include "rainbow/gen.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rainbow/random.hpp"

namespace rainbow {
namespace {

Coloring checked(Coloring coloring) {
  if (auto verdict = verify_proper(coloring); !verdict) {
    throw std::logic_error("generator produced an improper coloring: " +
                           verdict.witness->first.to_string() + " and " +
                           verdict.witness->second.to_string());
  }
  return coloring;
}

std::string canonical_name(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

struct BudgetExceeded {};

class Factorizer {
 public:
  Factorizer(const Params& params, std::uint64_t node_budget)
      : params_(params), budget_(node_budget) {
    const int vc = params.vertex_count();
    full_ = vc == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vc) - 1;
    by_min_.resize(vc);
    for_each_edge(params, [&](EdgeRank e, std::span<const Vertex> vs) {
      std::uint64_t mask = 0;
      for (Vertex v : vs) mask |= std::uint64_t{1} << v;
      masks_.push_back(mask);
      by_min_[vs[0]].push_back(e);
    });
    color_.assign(masks_.size(), kNoColor);
    factor_count_ = static_cast<DenseColor>(masks_.size() / params.n());
  }

  // Attempt 0 uses colex order; later attempts shuffle each candidate list
  // with a seed derived from the attempt number.
  bool run(int attempts) {
    const auto colex = by_min_;
    for (int attempt = 0; attempt < attempts; ++attempt) {
      if (attempt > 0) {
        by_min_ = colex;
        Rng rng(derive_seed(0x5EEDF00DULL, static_cast<std::uint64_t>(attempt)));
        for (auto& list : by_min_) rng.shuffle(std::span<EdgeRank>(list));
      }
      std::fill(color_.begin(), color_.end(), kNoColor);
      covered_ = full_;
      factor_ = 0;
      nodes_ = 0;
      try {
        if (open_factor()) return true;
      } catch (const BudgetExceeded&) {
      }
    }
    return false;
  }

  std::vector<Color> colors() const { return {color_.begin(), color_.end()}; }

 private:
  bool open_factor() {
    if (factor_ == factor_count_) return true;
    std::size_t e0 = 0;
    while (color_[e0] != kNoColor) ++e0;
    place(e0);
    covered_ = masks_[e0];
    if (extend()) return true;
    unplace(e0);
    covered_ = full_;
    return false;
  }

  bool extend() {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    if (covered_ == full_) {
      ++factor_;
      if (!all_completable()) {
        --factor_;
        return false;
      }
      if (open_factor()) return true;
      --factor_;
      covered_ = full_;
      return false;
    }
    const int v = std::countr_zero(~covered_);
    const std::uint64_t saved = covered_;
    for (EdgeRank e : by_min_[v]) {
      if (color_[e] != kNoColor || (masks_[e] & covered_) != 0) continue;
      place(e);
      covered_ = saved | masks_[e];
      if (extend()) return true;
      unplace(e);
      covered_ = saved;
    }
    return false;
  }

  // Every unplaced edge must still extend to a factor of unplaced edges.
  // Dead masks are shared across the edges of one check.
  bool all_completable() {
    dead_.clear();
    for (std::size_t e = 0; e < masks_.size(); ++e) {
      if (color_[e] == kNoColor && !completes(masks_[e])) return false;
    }
    return true;
  }

  bool completes(std::uint64_t covered) {
    if (covered == full_) return true;
    if (dead_.contains(covered)) return false;
    if (++nodes_ > budget_) throw BudgetExceeded{};
    const int v = std::countr_zero(~covered);
    for (EdgeRank e : by_min_[v]) {
      if (color_[e] == kNoColor && (masks_[e] & covered) == 0 && completes(covered | masks_[e])) {
        return true;
      }
    }
    dead_.insert(covered);
    return false;
  }

  void place(std::size_t e) { color_[e] = factor_; }
  void unplace(std::size_t e) { color_[e] = kNoColor; }

  Params params_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t full_ = 0;
  std::uint64_t covered_ = 0;
  DenseColor factor_ = 0;
  DenseColor factor_count_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<EdgeRank>> by_min_;
  std::vector<DenseColor> color_;
  std::unordered_set<std::uint64_t> dead_;
};

// Used-color bitsets, one row per vertex; rows widen as colors are added.
class ColorRows {
 public:
  explicit ColorRows(int rows) : rows_(rows) {}

  std::size_t words() const { return stride_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }

  void set(Vertex v, DenseColor c) {
    if (c / 64 >= stride_) widen(c / 64 + 1);
    bits_[static_cast<std::size_t>(v) * stride_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

 private:
  void widen(std::size_t need) {
    std::size_t stride = std::max<std::size_t>(need, stride_ * 2);
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(rows_) * stride, 0);
    for (int v = 0; v < rows_; ++v) {
      std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(v * stride_), stride_,
                  bits.begin() + static_cast<std::ptrdiff_t>(v * stride));
    }
    bits_ = std::move(bits);
    stride_ = stride;
  }

  int rows_;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Position of the k-th zero bit (k counted from 0) among the first `limit`
// bits of `used`.
DenseColor kth_free(std::span<const std::uint64_t> used, DenseColor limit, std::uint64_t k) {
  for (std::size_t w = 0; w * 64 < limit; ++w) {
    std::uint64_t free = ~used[w];
    const DenseColor top = std::min<DenseColor>(64, limit - static_cast<DenseColor>(w * 64));
    if (top < 64) free &= (std::uint64_t{1} << top) - 1;
    const auto count = static_cast<std::uint64_t>(std::popcount(free));
    if (k < count) {
      for (; k > 0; --k) free &= free - 1;
      return static_cast<DenseColor>(w * 64 + std::countr_zero(free));
    }
    k -= count;
  }
  return limit;
}

}  // namespace

Coloring gen_round_robin(int n) {
  const Params params(2, n);
  const int m = 2 * n - 1;
  std::vector<Color> colors(params.edge_count());
  for (int i = 0; i < m; ++i) {
    colors[pair_rank(i, m)] = i;
    for (int j = 1; j < n; ++j) {
      colors[pair_rank((i + j) % m, ((i - j) % m + m) % m)] = i;
    }
  }
  return checked(Coloring(params, std::move(colors)));
}

Coloring gen_backtrack_factorization(const Params& params, std::uint64_t edge_cap) {
  if (params.n() < 2) throw ValidationError("backtrack factorization needs n >= 2");
  if (params.edge_count() > edge_cap || params.vertex_count() > 64) {
    throw CapacityError("K_" + std::to_string(params.vertex_count()) + "^(" +
                        std::to_string(params.r()) + ") has " +
                        std::to_string(params.edge_count()) +
                        " edges; backtrack factorization is capped at " +
                        std::to_string(edge_cap));
  }
  Factorizer search(params, 200'000);
  if (!search.run(200)) {
    throw CapacityError("factorization search exhausted its restart budget");
  }
  return checked(Coloring(params, search.colors()));
}

Coloring gen_greedy_ordered(const Params& params, std::span<const EdgeRank> order,
                            GreedyStrategy strategy, std::uint64_t seed) {
  if (order.size() != params.edge_count()) {
    throw ValidationError("edge order must list every edge once");
  }
  Rng rng(seed);
  ColorRows used(params.vertex_count());
  std::vector<std::uint64_t> acc;
  std::vector<Color> colors(params.edge_count(), ~Color{0});
  DenseColor palette = 0;
  for (EdgeRank e : order) {
    if (e >= colors.size() || colors[e] != ~Color{0}) {
      throw ValidationError("edge order must be a permutation of the edge ranks");
    }
    const Edge edge = unrank_edge(e, params);
    acc.assign(used.words(), 0);
    for (Vertex v : edge) {
      auto row = used.row(v);
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= row[w];
    }
    DenseColor pick;
    if (strategy == GreedyStrategy::kLeastColor) {
      pick = kth_free(acc, palette, 0);
    } else {
      std::uint64_t feasible = 0;
      for (std::size_t w = 0; w * 64 < palette; ++w) {
        std::uint64_t free = ~acc[w];
        const DenseColor top = std::min<DenseColor>(64, palette - static_cast<DenseColor>(w * 64));
        if (top < 64) free &= (std::uint64_t{1} << top) - 1;
        feasible += static_cast<std::uint64_t>(std::popcount(free));
      }
      pick = kth_free(acc, palette, rng.below(feasible + 1));
    }
    if (pick == palette) ++palette;
    colors[e] = pick;
    for (Vertex v : edge) used.set(v, pick);
  }
  return checked(Coloring(params, std::move(colors)));
}

Coloring gen_random_greedy(const Params& params, std::uint64_t seed, GreedyStrategy strategy) {
  if (params.edge_count() > kMaxEdgeCount) {
    throw CapacityError("instance too large to generate");
  }
  std::vector<EdgeRank> order(params.edge_count());
  std::iota(order.begin(), order.end(), EdgeRank{0});
  Rng rng(seed);
  rng.shuffle(std::span<EdgeRank>(order));
  return gen_greedy_ordered(params, order, strategy, derive_seed(seed, 1));
}

Coloring gen_fixture(std::string_view name, std::optional<Params> params) {
  const std::string key = canonical_name(name);
  if (key == "k4-no-rainbow-2k2") {
    // colex order: {0,1} {0,2} {1,2} {0,3} {1,3} {2,3}
    return checked(Coloring(Params(2, 2), {0, 1, 2, 2, 1, 0}));
  }
  if (key == "k4-factorization") return gen_backtrack_factorization(Params(2, 2));
  if (key == "all-distinct") {
    if (!params) throw ValidationError("fixture all-distinct needs r and n");
    std::vector<Color> colors(params->edge_count());
    std::iota(colors.begin(), colors.end(), Color{0});
    return checked(Coloring(*params, std::move(colors)));
  }
  if (key == "k3r-blocked") {
    if (!params || params->n() != 3) throw ValidationError("fixture k3r-blocked needs n = 3");
    const int r = params->r();
    std::vector<Color> colors(params->edge_count());
    std::iota(colors.begin(), colors.end(), Color{0});
    std::vector<Vertex> m1(r), m2(r), rest(r);
    std::iota(m1.begin(), m1.end(), 0);
    std::iota(m2.begin(), m2.end(), r);
    std::iota(rest.begin(), rest.end(), 2 * r);
    auto join = [&](const Edge& a, const Edge& b) {
      const EdgeRank ra = rank_edge(a, *params);
      const EdgeRank rb = rank_edge(b, *params);
      colors[ra] = colors[rb] = std::min(ra, rb);
    };
    join(Edge(m1), Edge(m2));
    // Pair every r-subset of `pool` with its complement, except `skip`.
    auto pair_up = [&](std::vector<Vertex> pool, const Edge& skip) {
      const Params half(r, 2);
      for (EdgeRank i = 0; i < half.edge_count(); ++i) {
        const Edge local = unrank_edge(i, half);
        if (local[0] != 0) continue;  // each split once
        std::vector<Vertex> a, b;
        for (int j = 0; j < 2 * r; ++j) {
          (local.contains(j) ? a : b).push_back(pool[j]);
        }
        const Edge ea(a), eb(b);
        if (ea == skip || eb == skip) continue;
        join(ea, eb);
      }
    };
    std::vector<Vertex> pool1(m2), pool2(m1);
    pool1.insert(pool1.end(), rest.begin(), rest.end());
    pool2.insert(pool2.end(), rest.begin(), rest.end());
    pair_up(pool1, Edge(m2));
    pair_up(pool2, Edge(m1));
    return checked(Coloring(*params, std::move(colors)));
  }
  throw ValidationError("unknown fixture '" + std::string(name) + "'");
}

Coloring generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::kRoundRobin:
      if (spec.params.r() != 2) throw ValidationError("round-robin requires r = 2");
      return gen_round_robin(spec.params.n());
    case GenKind::kBacktrackFactorization:
      return gen_backtrack_factorization(spec.params);
    case GenKind::kRandomGreedy:
      return gen_random_greedy(spec.params, spec.seed, spec.strategy);
    case GenKind::kFixture:
      return gen_fixture(spec.fixture_name, spec.params);
  }
  throw ValidationError("unknown generator kind");
}

Coloring permute_vertices(const Coloring& coloring, std::span<const Vertex> perm) {
  const Params& params = coloring.params();
  const int vc = params.vertex_count();
  if (static_cast<int>(perm.size()) != vc) throw ValidationError("permutation has wrong size");
  std::vector<bool> hit(vc, false);
  for (Vertex v : perm) {
    if (v < 0 || v >= vc || hit[v]) throw ValidationError("not a permutation");
    hit[v] = true;
  }
  std::vector<Color> colors(params.edge_count());
  std::vector<Vertex> image(params.r());
  for_each_edge(params, [&](EdgeRank e, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) image[i] = perm[vs[i]];
    colors[rank_edge(Edge(image), params)] = coloring.color(e);
  });
  return Coloring(params, std::move(colors));
}

}  // namespace rainbow
