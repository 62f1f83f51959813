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

#ifndef RAINBOW_RANDOM_HPP_
#define RAINBOW_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace rainbow {

// Reproducible randomness. The engine is std::mt19937_64, whose state
// transition is fixed by the C++ standard; bounded draws and shuffles are
// done here rather than through <random> distributions, which are
// implementation-defined. Same seed, same stream, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  // Fisher-Yates, drawing from the back.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Seed of instance i in a run driven by master_seed.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t i) {
  return master_seed ^ (i * 0x9E3779B97F4A7C15ULL);
}

}  // namespace rainbow

#endif  // RAINBOW_RANDOM_HPP_
