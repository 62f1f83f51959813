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

#ifndef RAINBOW_SRC_SOLVER_INTERNAL_HPP_
#define RAINBOW_SRC_SOLVER_INTERNAL_HPP_

#include <optional>
#include <vector>

#include "graph_state.hpp"
#include "rainbow/solver.hpp"

namespace rainbow::detail {

struct StepResult {
  AugmentRoute route = AugmentRoute::kNone;
  Vertex s = -1;
  Vertex t = -1;
  std::optional<Color> rotation_color;
  int pairs_examined = 0;
};

// One augmentation step in place (see augment_once for the search order).
// When traces is non-null, appends one trace per pair examined; the state
// must then be maximal whenever a pair is reached, which the trivial
// extension check guarantees.
StepResult augment_step(GraphState& state, std::vector<AugmentationTrace>* traces);

// Throws ValidationError naming the witness pair.
void require_proper(const Coloring& coloring);

// Throws std::logic_error unless report.factor is a rainbow 1-factor.
void verify_factor(const SolveReport& report, const Coloring& coloring);

}  // namespace rainbow::detail

#endif  // RAINBOW_SRC_SOLVER_INTERNAL_HPP_
