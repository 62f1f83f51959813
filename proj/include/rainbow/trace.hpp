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

// Instrumentation of the counting argument behind augmenting a maximal
// rainbow matching M (|M| = k < n) of a properly colored K_{2n}.
//
// For two unmatched vertices s, t:
//   base_color   C(st), which lies in C(M) when M is maximal
//   C1 / C2      colors at s inside / outside C(M); p = |C1|
//   C1' / C2'    the same at t; q = |C1'|
//   candidate    path s-a-b-t with C(sa) in F(M) and {a,b} in M; there are
//                exactly 2n-1-p of them
//   symmetric    a candidate whose third edge has the first edge's color
//   L            colors i of F(M)-edges {t, z_i} at t, minus those whose z_i
//                lies on the base-colored matching edge
//   rotation M_i (M - {e_i}) + {e_t}, e_t = {t, z_i}, e_i = {z_i, t_i};
//                t_i becomes unmatched and the pair (s, t_i) is inspected
//
// Colors are reported as the coloring's own ids, never renamed.

#ifndef RAINBOW_TRACE_HPP_
#define RAINBOW_TRACE_HPP_

#include <string>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

struct CandidatePath {
  Vertex s = -1, a = -1, b = -1, end = -1;  // s-a-b-end with {a,b} matched
  Color first_color = 0;
  Color third_color = 0;
  bool symmetric = false;   // third_color == first_color
  bool augmenting = false;  // swapping {a,b} for {s,a},{b,end} stays rainbow
};

struct RotationInventory {
  Color color = 0;  // i
  Vertex z = -1;    // e_t = {t, z}
  Vertex t_i = -1;  // e_i = {z, t_i}
  Color e_i_color = 0;
  std::size_t free_first_edges = 0;  // |C(s) ∩ F(M_i)|
  bool trivial_extension = false;    // some edge disjoint from M_i has a color in F(M_i)
  std::vector<CandidatePath> candidates;
  std::size_t symmetric_count = 0;
  std::size_t augmenting_count = 0;
};

struct AugmentationTrace {
  int n = 0;
  int k = 0;
  Vertex s = -1;
  Vertex t = -1;
  Color base_color = 0;
  bool base_color_matched = false;
  std::vector<Color> c1, c2;              // at s
  std::vector<Color> c1_t, c2_t;          // at t
  int p = 0;
  int q = 0;
  std::vector<Color> excluded;            // at most 2 colors
  std::vector<Color> rotation_colors;     // L, ascending
  std::vector<CandidatePath> candidates;  // relative to M
  std::size_t symmetric_count = 0;
  std::size_t augmenting_count = 0;
  std::vector<RotationInventory> rotations;
  int x = 0;  // 2n - p
  int y = 0;  // 2n - q
  bool inequality_holds = false;  // 2n-p-1 >= (2n-q-3)(2n-p-k)

  // Whether any base path, rotation path, or rotated trivial extension
  // yields a rainbow matching with k+1 edges.
  bool any_augmentation() const;
};

// Full inventory for the unmatched pair (s, t). M must be a maximal rainbow
// matching of a proper coloring with r = 2; throws ValidationError otherwise
// (including when s or t is matched or s == t). Does not modify M.
AugmentationTrace analyze_pair(const Coloring& coloring, const Matching& matching, Vertex s,
                               Vertex t);

// augmentable_guaranteed: the inequality fails, so the assumption that nothing
//   augments is refuted by counting.
// inequality_violated_by_proof: the inequality holds, so counting gives no
//   guarantee. Cannot happen when k < n and n >= 5; expected for n <= 4.
// inconsistent: one of the structural claims failed on this trace.
enum class CountingVerdict { kAugmentableGuaranteed, kInequalityViolatedByProof, kInconsistent };

struct CountingCheck {
  CountingVerdict verdict = CountingVerdict::kInconsistent;
  long lhs = 0;  // 2n-p-1
  long rhs = 0;  // (2n-q-3)(2n-p-k)
  bool injective = true;
  std::vector<std::string> violations;
};

// Checks the trace against the claims it instruments:
//  - |C1| + |C2| = |C1'| + |C2'| = 2n-1 and base_color in C(M);
//  - base candidate count = 2n-1-p;
//  - no base augmentation => symmetric count >= 2n-p-k;
//  - every rotation: C(e_i) != base_color, |C(s) ∩ F(M_i)| within 1 of
//    2n-1-p, and (absent a trivial extension) candidates within 1 of 2n-1-p
//    and, when nothing augments, symmetric >= candidates-(k-1);
//  - symmetric paths over base + rotations have pairwise distinct first-edge
//    colors, all in C2. A rotation path s-z_i-t-t_i uses the same first and
//    third edges as the base path s-z_i-t_i-t and counts as the same path.
CountingCheck check_counting(const AugmentationTrace& trace);

const char* to_string(CountingVerdict verdict);

}  // namespace rainbow

#endif  // RAINBOW_TRACE_HPP_
