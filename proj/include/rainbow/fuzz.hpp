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

// Seeded property runs: generate, solve, verify, cross-check.
//
// Instance i uses seed derive_seed(master_seed, i). Workers take contiguous
// blocks of indices and results are merged in index order, so the summary
// depends only on the config and not on the worker count.

#ifndef RAINBOW_FUZZ_HPP_
#define RAINBOW_FUZZ_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {

enum class FuzzMode { kGreedy, kFactorization, kMixed };

struct FuzzConfig {
  Params params{2, 3};
  std::uint64_t iters = 100;
  std::uint64_t master_seed = 0;
  int workers = 1;
  FuzzMode mode = FuzzMode::kMixed;
  bool record_traces = true;
};

struct FuzzSummary {
  std::uint64_t instances = 0;
  std::uint64_t successes = 0;
  std::uint64_t expected_negatives = 0;   // verified absent with n <= 2
  std::uint64_t unexpected_absent = 0;    // absent with n >= 3
  std::uint64_t exhausted = 0;            // augmentation found nothing at k < n
  std::uint64_t fallbacks = 0;            // exhaustive search rescued the graph solver
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_disagreements = 0;
  std::uint64_t traces = 0;
  std::uint64_t trace_violations = 0;     // traces with at least one violation
  std::uint64_t unaugmentable_pairs = 0;  // traced pairs with no route at all
  std::uint64_t contradictions = 0;
  std::uint64_t trivial_extensions = 0;
  std::uint64_t direct_paths = 0;
  std::uint64_t rotations = 0;
  std::array<std::uint64_t, 3> k3r_modes{};  // indexed by K3rMode
  std::vector<std::string> failures;          // first few, by instance index

  bool clean() const {
    return exhausted == 0 && fallbacks == 0 && oracle_disagreements == 0 &&
           trace_violations == 0 && unexpected_absent == 0 && contradictions == 0;
  }
  friend bool operator==(const FuzzSummary&, const FuzzSummary&) = default;
};

inline constexpr std::size_t kMaxReportedFailures = 20;

// The coloring of instance `index`.
Coloring fuzz_instance(const FuzzConfig& config, std::uint64_t index);

// trace_sink, when set, receives every trace in instance order after the
// workers finish.
FuzzSummary run_fuzz(const FuzzConfig& config,
                     const std::function<void(std::uint64_t, const AugmentationTrace&)>&
                         trace_sink = nullptr);

const char* to_string(FuzzMode mode);

}  // namespace rainbow

#endif  // RAINBOW_FUZZ_HPP_
