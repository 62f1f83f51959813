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

// Rainbow 1-factor search.
//
//   r = 2, n = 3, 4   exhaustive (15 and 105 perfect matchings)
//   r = 2, n >= 5     greedy maximal rainbow matching, then augment_once
//                     until perfect
//   n = 3             solve_k3r, constructive
//   r > 2, n > 3      two-edge local search, exhaustive below 13 vertices
//   n <= 2            direct enumeration (no existence guarantee)
//
// Every factor leaving this module has passed verify_one_factor and
// is_rainbow.

#ifndef RAINBOW_SOLVER_HPP_
#define RAINBOW_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {

// Greedy pass over edges in the given order (colex when omitted). The result
// is rainbow and maximal: every edge disjoint from it repeats a used color.
Matching greedy_rainbow_matching(const Coloring& coloring);
Matching greedy_rainbow_matching(const Coloring& coloring, std::span<const EdgeRank> order);

// True iff no edge disjoint from the matching has an unused color.
bool is_maximal_rainbow(const Coloring& coloring, const Matching& matching);

enum class AugmentOutcome { kAugmented, kExhausted };
enum class AugmentRoute { kNone, kTrivialExtension, kDirectPath, kRotation };

struct AugmentOptions {
  bool record_traces = false;
};

struct AugmentResult {
  AugmentOutcome outcome = AugmentOutcome::kExhausted;
  AugmentRoute route = AugmentRoute::kNone;
  std::optional<Matching> new_matching;  // size k+1 when augmented
  Vertex s = -1;                         // the pair that produced it
  Vertex t = -1;
  std::optional<Color> rotation_color;   // i, when route is kRotation
  int pairs_examined = 0;
  std::vector<AugmentationTrace> traces;  // one per pair examined
};

// One augmentation step on a rainbow matching of size k < n in a properly
// colored K_{2n}. Search order, first hit wins:
//   1. an edge disjoint from M with an unused color;
//   2. for each ordered unmatched pair (s, t), vertices ascending:
//      a. direct paths s-a-b-t (a ascending): M - {a,b} + {s,a} + {b,t};
//      b. rotations M_i for i in L (color id ascending): trivial extension
//         of M_i, then direct paths from s to t_i.
// Throws ValidationError for r != 2, an improper coloring, a non-rainbow M,
// or k >= n.
AugmentResult augment_once(const Coloring& coloring, const Matching& matching,
                           const AugmentOptions& options = {});

enum class K3rMode { kAllIndependentDistinct, kDirectTriple, kFallbackTriple };

struct K3rCertificate {
  K3rMode mode = K3rMode::kAllIndependentDistinct;
  std::optional<Edge> m1, m2;  // disjoint, same color
  // Rejected splits (m, V - m1 - m) and (m, V - m2 - m), in search order.
  std::vector<std::pair<Edge, Edge>> tried;
  std::vector<Edge> factor;
};

// The search is exact for n = 3, any r >= 2. Throws ValidationError if
// n != 3 or the coloring is improper, TheoremContradiction if the fallback
// triple is not rainbow.
std::pair<OneFactor, K3rCertificate> solve_k3r(const Coloring& coloring);

struct OracleResult {
  std::uint64_t total_factors = 0;
  std::uint64_t rainbow_factors = 0;
  // First rainbow factor in enumeration order: edges listed by smallest
  // vertex, each step taking the lowest uncovered vertex and trying its
  // edges in colex order.
  std::optional<OneFactor> witness;
};

inline constexpr int kOracleVertexCap = 12;

// Every 1-factor, counted. Throws CapacityError beyond 12 vertices.
OracleResult oracle_enumerate(const Coloring& coloring);

inline constexpr int kExhaustiveVertexCap = 16;

// First rainbow factor in the oracle's order, pruning color repeats.
// Throws CapacityError beyond 16 vertices.
std::optional<OneFactor> exhaustive_rainbow_factor(const Coloring& coloring);

enum class SolveMethod { kAuto, kAugment, kExhaustive, kK3r };
enum class SolvedBy { kNone, kOracle, kAugmentation, kK3r, kLocalSearch, kExhaustive, kDirect };
enum class Absence { kNone, kVerifiedAbsent, kBudgetExhausted };

struct SolveOptions {
  SolveMethod method = SolveMethod::kAuto;
  bool record_traces = false;
  bool check_proper = true;
  int local_search_restarts = 64;
  std::uint64_t seed = 0x5EED;
};

struct GraphSolveStats {
  int greedy_size = 0;
  int augment_calls = 0;
  int trivial_extensions = 0;
  int direct_paths = 0;
  int rotations = 0;
  int later_pairs = 0;  // augmentations not found from the first pair examined
  int exhausted = 0;
  int fallbacks = 0;
};

struct SolveReport {
  std::optional<OneFactor> factor;
  SolvedBy solved_by = SolvedBy::kNone;
  Absence absence = Absence::kNone;
  std::string reason;
  GraphSolveStats graph;
  std::vector<AugmentationTrace> traces;
  std::optional<K3rCertificate> certificate;
  std::optional<OracleResult> oracle;
};

// The augmentation search failed and so did the exhaustive fallback (or
// none was possible). Carries the traces of the failing step.
class AugmentationContradiction : public TheoremContradiction {
 public:
  AugmentationContradiction(const std::string& what, std::vector<AugmentationTrace> traces)
      : TheoremContradiction(what), traces_(std::move(traces)) {}
  const std::vector<AugmentationTrace>& traces() const { return traces_; }

 private:
  std::vector<AugmentationTrace> traces_;
};

// r = 2, n >= 3. Throws ValidationError for n < 3 or an improper coloring,
// AugmentationContradiction when no factor can be produced.
SolveReport solve_graph(const Coloring& coloring, const SolveOptions& options = {});

// Dispatch per the table above. Throws ValidationError on an improper
// coloring, TheoremContradiction when a guaranteed factor is not found.
SolveReport solve(const Coloring& coloring, const SolveOptions& options = {});

const char* to_string(AugmentRoute route);
const char* to_string(K3rMode mode);
const char* to_string(SolvedBy by);

}  // namespace rainbow

#endif  // RAINBOW_SOLVER_HPP_
