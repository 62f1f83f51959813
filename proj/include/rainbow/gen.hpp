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

// Proper coloring generators. Every function here checks its own output with
// verify_proper before returning it.

#ifndef RAINBOW_GEN_HPP_
#define RAINBOW_GEN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rainbow/core.hpp"

namespace rainbow {

enum class GenKind { kRoundRobin, kBacktrackFactorization, kRandomGreedy, kFixture };
enum class GreedyStrategy { kLeastColor, kRandomFeasible };

struct GenSpec {
  GenKind kind = GenKind::kRandomGreedy;
  Params params{2, 3};
  std::uint64_t seed = 0;
  GreedyStrategy strategy = GreedyStrategy::kLeastColor;
  std::string fixture_name;
};

// Circle method 1-factorization of K_{2n}: pivot 2n-1, round i pairs
// {i, 2n-1} and {(i+j) mod (2n-1), (i-j) mod (2n-1)} for j = 1..n-1, colored i.
Coloring gen_round_robin(int n);

// Default bound on gen_backtrack_factorization: edge_count <= 500 (covers
// K_9^(3), K_12^(3), K_12^(4) and K_{2n} up to n = 16).
inline constexpr std::uint64_t kFactorizationEdgeCap = 500;

// 1-factorization of K_{rn}^{(r)} by depth-first search. Factor f is colored f
// and always contains the lowest edge not yet placed. Throws CapacityError
// if edge_count > cap or the node budget runs out.
Coloring gen_backtrack_factorization(const Params& params,
                                     std::uint64_t edge_cap = kFactorizationEdgeCap);

// Greedy coloring of a seeded shuffle of colex order.
Coloring gen_random_greedy(const Params& params, std::uint64_t seed,
                           GreedyStrategy strategy = GreedyStrategy::kLeastColor);

// Greedy coloring of edges in the given order (a permutation of 0..edge_count-1).
// least_color takes the smallest feasible id; random_feasible draws uniformly
// from the feasible colors already in use plus one fresh color.
Coloring gen_greedy_ordered(const Params& params, std::span<const EdgeRank> order,
                            GreedyStrategy strategy, std::uint64_t seed = 0);

// Named fixtures:
//   k4-no-rainbow-2k2   K_4 colored by its three perfect matchings
//                       ({0,1},{2,3} -> 0; {0,2},{1,3} -> 1; {0,3},{1,2} -> 2)
//   k4-factorization    gen_backtrack_factorization(K_4); same coloring
//   all-distinct        color(e) = rank(e); needs params
//   k3r-blocked         K_{3r}^{(r)} in which m1 = {0..r-1} and m2 = {r..2r-1}
//                       share a color and every (m, complement) split of
//                       V - m1 and of V - m2 is a two-edge color class, so no
//                       rainbow factor contains m1 or m2; needs params, n = 3
// Underscores are accepted in place of dashes. Throws ValidationError on an
// unknown name or missing/unsuitable params.
Coloring gen_fixture(std::string_view name, std::optional<Params> params = std::nullopt);

Coloring generate(const GenSpec& spec);

// Relabels vertices: vertex v of the input becomes perm[v].
Coloring permute_vertices(const Coloring& coloring, std::span<const Vertex> perm);

}  // namespace rainbow

#endif  // RAINBOW_GEN_HPP_
