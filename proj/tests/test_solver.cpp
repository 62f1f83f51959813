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

#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;

namespace {

std::vector<Edge> edges_of(std::initializer_list<Edge> list) { return list; }

// Rotation instance on K_10, found by filtering seeded greedy runs: with
// this maximal rainbow matching and unmatched pair (1, 2), no direct swap
// works and the search must pass through a rotation.
const std::vector<Color> kRotationColors{2, 0, 7, 6, 5, 2, 9, 6, 8, 1, 3, 4, 1, 0, 7,
                                         1, 3, 6, 4, 0, 5, 4, 0, 3, 8, 5, 9, 2, 8, 1,
                                         5, 7, 3, 2, 9, 6, 5, 8, 4, 3, 2, 6, 7, 1, 0};
const std::vector<Edge> kRotationMatching{{4, 6}, {0, 5}, {7, 9}, {3, 8}};

// Whether replacing {a,b} by {s,a},{b,t} keeps m rainbow (test-side check).
bool swap_works(const Coloring& c, const std::vector<Edge>& m, Vertex s, Vertex a, Vertex b,
                Vertex t) {
  std::set<Color> used;
  for (const Edge& e : m) {
    if (!(e == Edge{a, b})) used.insert(c.color(e));
  }
  const Color x = c.color(Edge{s, a});
  const Color y = c.color(Edge{b, t});
  return x != y && !used.count(x) && !used.count(y);
}

bool maximal_by_scan(const Coloring& c, const Matching& m) {
  std::set<Color> used;
  for (const Edge& e : m.edges()) used.insert(c.color(e));
  for (EdgeRank e = 0; e < c.params().edge_count(); ++e) {
    const Edge edge = unrank_edge(e, c.params());
    if (m.disjoint_from(edge) && !used.count(c.color(e))) return false;
  }
  return true;
}

void check_factor(const SolveReport& report, const Coloring& c) {
  REQUIRE(report.factor);
  CHECK(verify_one_factor(c.params(), report.factor->edges));
  CHECK(is_rainbow(report.factor->edges, c));
}

}  // namespace

TEST_CASE("greedy rainbow matching") {
  const Coloring distinct = gen_fixture("all-distinct", Params(2, 3));
  const Matching m = greedy_rainbow_matching(distinct);
  CHECK(m.size() == 3);
  CHECK(std::vector<Edge>(m.edges().begin(), m.edges().end()) ==
        edges_of({{0, 1}, {2, 3}, {4, 5}}));

  const Coloring k4 = gen_fixture("k4-no-rainbow-2k2");
  CHECK(greedy_rainbow_matching(k4).size() == 1);
  CHECK(is_maximal_rainbow(k4, greedy_rainbow_matching(k4)));

  for (int n = 3; n <= 8; ++n) {
    const Coloring rr = gen_round_robin(n);
    const Matching g = greedy_rainbow_matching(rr);
    CHECK(g.is_rainbow(rr));
    CHECK(maximal_by_scan(rr, g));
    CHECK(is_maximal_rainbow(rr, g));
  }

  std::vector<EdgeRank> reversed(15);
  std::iota(reversed.rbegin(), reversed.rend(), EdgeRank{0});
  const Matching r = greedy_rainbow_matching(distinct, reversed);
  CHECK(r.edges().front() == Edge{4, 5});
  CHECK(r.size() == 3);
}

TEST_CASE("is_maximal_rainbow matches a scan on random instances") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Coloring c = gen_random_greedy(Params(2, 6), seed);
    Matching m(c.params());
    m.add(unrank_edge(seed % 66, c.params()));
    CHECK(is_maximal_rainbow(c, m) == maximal_by_scan(c, m));
    const Matching g = greedy_rainbow_matching(c);
    CHECK(is_maximal_rainbow(c, g));
  }
}

TEST_CASE("augment_once: trivial extension") {
  const Coloring c = gen_fixture("all-distinct", Params(2, 3));
  const Matching m(c.params(), {Edge{0, 1}});
  const AugmentResult r = augment_once(c, m);
  CHECK(r.outcome == AugmentOutcome::kAugmented);
  CHECK(r.route == AugmentRoute::kTrivialExtension);
  REQUIRE(r.new_matching);
  CHECK(r.new_matching->size() == 2);
  CHECK(r.new_matching->is_rainbow(c));
}

TEST_CASE("augment_once: preconditions") {
  const Coloring c = gen_round_robin(5);
  const SolveReport solved = solve_graph(c);
  REQUIRE(solved.factor);
  CHECK_THROWS_AS(augment_once(c, Matching(c.params(), solved.factor->edges)), ValidationError);
  // {0,9} and {1,8} share a round-robin class.
  CHECK_THROWS_AS(augment_once(c, Matching(c.params(), {Edge{0, 9}, Edge{1, 8}})),
                  ValidationError);
  const Coloring bad(Params(2, 3), std::vector<Color>(15, 0));
  CHECK_THROWS_AS(augment_once(bad, Matching(bad.params())), ValidationError);
  const Coloring hyper = gen_fixture("all-distinct", Params(3, 3));
  CHECK_THROWS_AS(augment_once(hyper, Matching(hyper.params())), ValidationError);
}

TEST_CASE("augment_once: rotation instance") {
  const Coloring c(Params(2, 5), kRotationColors);
  REQUIRE(oracle::proper(10, 2, c.colors()));
  const Matching m(c.params(), kRotationMatching);
  REQUIRE(m.is_rainbow(c));
  REQUIRE(maximal_by_scan(c, m));

  // No direct swap works for the unmatched pair, in either direction.
  for (const Edge& e : kRotationMatching) {
    CHECK_FALSE(swap_works(c, kRotationMatching, 1, e[0], e[1], 2));
    CHECK_FALSE(swap_works(c, kRotationMatching, 1, e[1], e[0], 2));
  }

  const AugmentResult r = augment_once(c, m, {.record_traces = true});
  CHECK(r.outcome == AugmentOutcome::kAugmented);
  CHECK(r.route == AugmentRoute::kRotation);
  CHECK(r.s == 1);
  CHECK(r.t == 2);
  REQUIRE(r.rotation_color);
  CHECK(*r.rotation_color == 4);
  REQUIRE(r.new_matching);
  std::set<std::vector<Vertex>> got;
  for (const Edge& e : r.new_matching->edges()) got.insert({e.begin(), e.end()});
  CHECK(got == std::set<std::vector<Vertex>>{{0, 1}, {2, 9}, {3, 8}, {4, 6}, {5, 7}});
  CHECK(oracle::proper(10, 2, c.colors()));
  CHECK(r.new_matching->is_rainbow(c));

  REQUIRE(r.traces.size() == 1);
  const AugmentationTrace& t = r.traces.front();
  CHECK(t.augmenting_count == 0);
  CHECK(t.candidates.size() == 5);
  CHECK(t.symmetric_count == 2);
  REQUIRE(t.rotations.size() == 3);
  CHECK(t.rotations[0].color == 4);
  CHECK(t.rotations[0].augmenting_count > 0);
  CHECK(t.any_augmentation());
  CHECK(check_counting(t).violations.empty());
}

TEST_CASE("solve_graph") {
  SUBCASE("all distinct K_6") {
    const Coloring c = gen_fixture("all-distinct", Params(2, 3));
    const SolveReport r = solve_graph(c);
    REQUIRE(r.factor);
    CHECK(r.factor->edges == edges_of({{0, 1}, {2, 3}, {4, 5}}));
  }
  SUBCASE("round robin n = 5..8 without fallback") {
    for (int n = 5; n <= 8; ++n) {
      const Coloring c = gen_round_robin(n);
      const SolveReport r = solve_graph(c, {.record_traces = true});
      check_factor(r, c);
      CHECK(r.solved_by == SolvedBy::kAugmentation);
      CHECK(r.graph.exhausted == 0);
      CHECK(r.graph.fallbacks == 0);
      for (const AugmentationTrace& t : r.traces) CHECK(check_counting(t).violations.empty());
    }
  }
  SUBCASE("K_6 extending two disjoint equal-colored edges") {
    // {0,1} and {2,3} colored first with the least color, so they share it.
    std::vector<EdgeRank> order{0, 5};
    for (EdgeRank e = 0; e < 15; ++e) {
      if (e != 0 && e != 5) order.push_back(e);
    }
    const Coloring c = gen_greedy_ordered(Params(2, 3), order, GreedyStrategy::kLeastColor);
    REQUIRE(c.color(Edge{0, 1}) == c.color(Edge{2, 3}));
    check_factor(solve_graph(c), c);
    CHECK(oracle::count_factors(c).rainbow > 0);
  }
  SUBCASE("forced augmentation on small graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      for (int n : {3, 4}) {
        const Coloring c = gen_random_greedy(Params(2, n), seed, GreedyStrategy::kRandomFeasible);
        SolveOptions o;
        o.method = SolveMethod::kAugment;
        const SolveReport r = solve_graph(c, o);
        check_factor(r, c);
      }
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(solve_graph(gen_round_robin(2)), ValidationError);
    CHECK_THROWS_AS(solve_graph(gen_fixture("all-distinct", Params(3, 3))), ValidationError);
    CHECK_THROWS_AS(solve_graph(Coloring(Params(2, 5), std::vector<Color>(45, 1))),
                    ValidationError);
  }
}

TEST_CASE("solve_k3r") {
  SUBCASE("fallback triple on the blocked fixture") {
    const Coloring c = gen_fixture("k3r-blocked", Params(3, 3));
    const auto [factor, cert] = solve_k3r(c);
    CHECK(cert.mode == K3rMode::kFallbackTriple);
    REQUIRE(cert.m1);
    REQUIRE(cert.m2);
    CHECK(*cert.m1 == Edge{0, 1, 2});
    CHECK(*cert.m2 == Edge{3, 4, 5});
    CHECK(factor.edges == edges_of({{3, 4, 6}, {0, 7, 8}, {1, 2, 5}}));
    CHECK(is_rainbow(factor.edges, c));
    // Ten splits of six vertices per side, minus the one holding the other edge.
    CHECK(cert.tried.size() == 18);
    for (const auto& [a, b] : cert.tried) CHECK(c.color(a) == c.color(b));
  }
  SUBCASE("fallback for larger r") {
    for (int r : {4, 5}) {
      const Coloring c = gen_fixture("k3r-blocked", Params(r, 3));
      const auto [factor, cert] = solve_k3r(c);
      CHECK(cert.mode == K3rMode::kFallbackTriple);
      CHECK(verify_one_factor(c.params(), factor.edges));
      CHECK(is_rainbow(factor.edges, c));
    }
  }
  SUBCASE("all distinct") {
    const Coloring c = gen_fixture("all-distinct", Params(3, 3));
    const auto [factor, cert] = solve_k3r(c);
    CHECK(cert.mode == K3rMode::kAllIndependentDistinct);
    CHECK(verify_one_factor(c.params(), factor.edges));
  }
  SUBCASE("factorization of K_9^(3)") {
    const Coloring c = gen_backtrack_factorization(Params(3, 3));
    const auto [factor, cert] = solve_k3r(c);
    CHECK(verify_one_factor(c.params(), factor.edges));
    CHECK(is_rainbow(factor.edges, c));
    CHECK(oracle::count_factors(c).rainbow > 0);
  }
  SUBCASE("needs n = 3") {
    CHECK_THROWS_AS(solve_k3r(gen_fixture("all-distinct", Params(3, 4))), ValidationError);
  }
}

TEST_CASE("oracle counts") {
  struct Case {
    int r, n;
    std::uint64_t total;
  };
  for (const Case& k : {Case{2, 3, 15}, Case{2, 4, 105}, Case{3, 3, 280}, Case{2, 6, 10395},
                        Case{3, 4, 15400}, Case{4, 3, 5775}, Case{2, 1, 1}, Case{6, 2, 462}}) {
    CAPTURE(k.r);
    CAPTURE(k.n);
    CHECK(oracle::factor_count_formula(k.r, k.n) == k.total);
    const Coloring c = gen_random_greedy(Params(k.r, k.n), 11);
    const OracleResult o = oracle_enumerate(c);
    CHECK(o.total_factors == k.total);
    if (k.n == 2) continue;  // a rainbow factor need not exist
    REQUIRE(o.witness);
    CHECK(verify_one_factor(c.params(), o.witness->edges));
    CHECK(is_rainbow(o.witness->edges, c));
  }
  const OracleResult k4 = oracle_enumerate(gen_fixture("k4-factorization"));
  CHECK(k4.total_factors == 3);
  CHECK(k4.rainbow_factors == 0);
  CHECK_FALSE(k4.witness);
  CHECK_THROWS_AS(oracle_enumerate(gen_round_robin(7)), CapacityError);
}

TEST_CASE("oracle rainbow counts match brute force") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const Params& p : {Params(2, 2), Params(2, 3), Params(2, 4), Params(3, 2), Params(3, 3),
                            Params(4, 2)}) {
      const Coloring c = gen_random_greedy(p, seed, seed % 2 ? GreedyStrategy::kRandomFeasible
                                                             : GreedyStrategy::kLeastColor);
      const OracleResult o = oracle_enumerate(c);
      const oracle::FactorCounts b = oracle::count_factors(c);
      CHECK(o.total_factors == b.total);
      CHECK(o.rainbow_factors == b.rainbow);
      CHECK(exhaustive_rainbow_factor(c).has_value() == (b.rainbow > 0));
    }
  }
}

TEST_CASE("exhaustive search") {
  const Coloring c = gen_round_robin(8);
  const auto f = exhaustive_rainbow_factor(c);
  REQUIRE(f);
  CHECK(verify_one_factor(c.params(), f->edges));
  CHECK(is_rainbow(f->edges, c));
  CHECK_FALSE(exhaustive_rainbow_factor(gen_round_robin(2)));
  CHECK_THROWS_AS(exhaustive_rainbow_factor(gen_round_robin(9)), CapacityError);
}

TEST_CASE("solve dispatch") {
  SUBCASE("K_4 factorization is verified absent") {
    const SolveReport r = solve(gen_fixture("k4-factorization"));
    CHECK_FALSE(r.factor);
    CHECK(r.absence == Absence::kVerifiedAbsent);
    CHECK(r.reason == "0 of 3 factors rainbow");
    SolveOptions o;
    o.method = SolveMethod::kExhaustive;
    const SolveReport e = solve(gen_fixture("k4-factorization"), o);
    CHECK(e.absence == Absence::kVerifiedAbsent);
    CHECK(e.reason == "0 of 3 factors rainbow");
  }
  SUBCASE("single edge") {
    const SolveReport r = solve(gen_fixture("all-distinct", Params(5, 1)));
    REQUIRE(r.factor);
    CHECK(r.factor->edges.size() == 1);
  }
  SUBCASE("n = 2 hypergraphs agree with brute force") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      for (const Params& p : {Params(2, 2), Params(3, 2), Params(4, 2)}) {
        const Coloring c = gen_random_greedy(p, seed);
        const SolveReport r = solve(c);
        CHECK(r.factor.has_value() == (oracle::count_factors(c).rainbow > 0));
        if (r.factor) check_factor(r, c);
      }
    }
  }
  SUBCASE("K_12^(4) routes to the k3r construction") {
    const Coloring c = gen_random_greedy(Params(4, 3), 3);
    const SolveReport r = solve(c);
    check_factor(r, c);
    CHECK(r.solved_by == SolvedBy::kK3r);
    CHECK(r.certificate);
  }
  SUBCASE("K_12^(3) takes the generic path") {
    const Coloring c = gen_random_greedy(Params(3, 4), 3);
    const SolveReport r = solve(c);
    check_factor(r, c);
    CHECK((r.solved_by == SolvedBy::kLocalSearch || r.solved_by == SolvedBy::kExhaustive));
    CHECK(oracle_enumerate(c).rainbow_factors > 0);
  }
  SUBCASE("larger hypergraphs") {
    for (const Params& p : {Params(3, 5), Params(3, 6), Params(4, 4)}) {
      const Coloring c = gen_random_greedy(p, 8);
      check_factor(solve(c), c);
    }
  }
  SUBCASE("method overrides") {
    SolveOptions o;
    o.method = SolveMethod::kK3r;
    CHECK_THROWS_AS(solve(gen_round_robin(4), o), ValidationError);
    const SolveReport k = solve(gen_backtrack_factorization(Params(3, 3)), o);
    CHECK(k.solved_by == SolvedBy::kK3r);
    o.method = SolveMethod::kAugment;
    CHECK_THROWS_AS(solve(gen_fixture("all-distinct", Params(3, 3)), o), ValidationError);
    const Coloring rr = gen_round_robin(4);
    const SolveReport a = solve(rr, o);
    check_factor(a, rr);
    CHECK((a.solved_by == SolvedBy::kAugmentation || a.solved_by == SolvedBy::kExhaustive));
    o.method = SolveMethod::kExhaustive;
    const SolveReport e = solve(gen_round_robin(7), o);
    CHECK(e.solved_by == SolvedBy::kExhaustive);
    check_factor(e, gen_round_robin(7));
  }
  SUBCASE("improper input is rejected") {
    CHECK_THROWS_AS(solve(Coloring(Params(3, 3), std::vector<Color>(84, 0))), ValidationError);
  }
}
