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

#ifndef RAINBOW_SRC_TRACE_INTERNAL_HPP_
#define RAINBOW_SRC_TRACE_INTERNAL_HPP_

#include "graph_state.hpp"
#include "rainbow/trace.hpp"

namespace rainbow::detail {

// analyze_pair without validation. The state must be maximal; it is
// modified during the rotation sweep and restored before returning.
AugmentationTrace analyze_pair_unchecked(GraphState& state, Vertex s, Vertex t);

}  // namespace rainbow::detail

#endif  // RAINBOW_SRC_TRACE_INTERNAL_HPP_
