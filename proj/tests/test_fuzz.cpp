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

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/fuzz.hpp"

using namespace rainbow;

TEST_CASE("fuzz summaries do not depend on the worker count") {
  FuzzConfig config;
  config.params = Params(2, 6);
  config.iters = 120;
  config.master_seed = 42;
  config.workers = 1;
  const FuzzSummary one = run_fuzz(config);
  config.workers = 3;
  const FuzzSummary three = run_fuzz(config);
  config.workers = 7;
  const FuzzSummary seven = run_fuzz(config);
  CHECK(one == three);
  CHECK(one == seven);
  CHECK(one.instances == 120);
  CHECK(one.successes == 120);
  CHECK(one.oracle_checked == 120);
  CHECK(one.clean());
}

TEST_CASE("fuzz instances are reproducible and proper") {
  FuzzConfig config;
  config.params = Params(3, 3);
  config.master_seed = 7;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Coloring c = fuzz_instance(config, i);
    CHECK(c == fuzz_instance(config, i));
    CHECK(oracle::proper(9, 3, c.colors()));
    // Odd indices are scrambled factorizations in mixed mode.
    if (i % 2 == 1) CHECK(c.color_count() == 28);
  }
  config.mode = FuzzMode::kFactorization;
  CHECK_FALSE(fuzz_instance(config, 1) == fuzz_instance(config, 2));
}

TEST_CASE("n = 2 absences count as expected negatives") {
  FuzzConfig config;
  config.params = Params(2, 2);
  config.iters = 10;
  const FuzzSummary s = run_fuzz(config);
  CHECK(s.instances == 10);
  CHECK(s.successes + s.expected_negatives == 10);
  CHECK(s.expected_negatives >= 5);  // every factorization instance
  CHECK(s.oracle_disagreements == 0);
  CHECK(s.clean());
}

TEST_CASE("fuzz passes traces to the sink in instance order") {
  FuzzConfig config;
  config.params = Params(2, 7);
  config.iters = 60;
  config.master_seed = 3;
  config.workers = 4;
  std::vector<std::uint64_t> seen;
  const FuzzSummary s = run_fuzz(config, [&](std::uint64_t i, const AugmentationTrace& t) {
    seen.push_back(i);
    CHECK(t.n == 7);
  });
  CHECK(seen.size() == s.traces);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(s.clean());
}

TEST_CASE("fuzz config validation") {
  FuzzConfig config;
  config.workers = 0;
  CHECK_THROWS_AS(run_fuzz(config), ValidationError);
}
