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

// Data model for edge-colored complete r-uniform hypergraphs K_{rn}^{(r)}.
//
// Vertices are 0 ... r*n-1. Edges are sorted r-subsets and are addressed by
// their colexicographic rank
//
//   rank({v_1 < ... < v_r}) = sum_i C(v_i, i)
//
// so a coloring is just an array of color ids indexed by rank.

#ifndef RAINBOW_CORE_HPP_
#define RAINBOW_CORE_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = std::int32_t;
using Color = std::uint64_t;       // opaque color id, as found in files
using DenseColor = std::uint32_t;  // 0 ... color_count-1, first-appearance order
using EdgeRank = std::uint64_t;

inline constexpr DenseColor kNoColor = ~DenseColor{0};

// Malformed input: wrong lengths, out-of-range vertices, broken preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An instance is larger than a bounded search is willing to handle.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An event the existence theorems rule out (e.g. the augmentation search and
// the exhaustive fallback both fail). Never expected; always reported.
class TheoremContradiction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binomial coefficient. Throws CapacityError if the result overflows 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Largest number of edges a Coloring may hold.
inline constexpr std::uint64_t kMaxEdgeCount = std::uint64_t{1} << 28;

class Params {
 public:
  // Throws ValidationError unless r >= 2 and n >= 1.
  Params(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  int vertex_count() const { return r_ * n_; }
  std::uint64_t edge_count() const { return edge_count_; }

  // C(rn-1, r-1): edges at one vertex, hence a lower bound on color_count.
  std::uint64_t degree() const;

  friend bool operator==(const Params&, const Params&) = default;

 private:
  int r_;
  int n_;
  std::uint64_t edge_count_;
};

// A sorted set of vertices. Construction sorts; validate() checks it against
// Params (length r, no duplicates, in range).
class Edge {
 public:
  Edge() = default;
  explicit Edge(std::vector<Vertex> vertices);
  Edge(std::initializer_list<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool intersects(const Edge& other) const;

  void validate(const Params& params) const;

  // Colexicographic comparison (compare largest elements first).
  friend bool colex_less(const Edge& a, const Edge& b);
  friend bool operator==(const Edge&, const Edge&) = default;

  std::string to_string() const;

 private:
  std::vector<Vertex> vertices_;
};

EdgeRank rank_edge(const Edge& edge, const Params& params);
Edge unrank_edge(EdgeRank index, const Params& params);

// Rank of {u, v} in K_{2n}; u != v, any order. No validation.
inline EdgeRank pair_rank(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<EdgeRank>(v) * (v - 1) / 2 + static_cast<EdgeRank>(u);
}

// Walks every edge in colex (= rank) order.
template <typename Fn>
void for_each_edge(const Params& params, Fn&& fn) {
  const int r = params.r();
  const int vc = params.vertex_count();
  std::vector<Vertex> v(r);
  for (int i = 0; i < r; ++i) v[i] = i;
  for (EdgeRank rank = 0;; ++rank) {
    fn(rank, std::span<const Vertex>(v));
    int i = 0;
    while (i < r && v[i] + 1 == (i + 1 < r ? v[i + 1] : vc)) ++i;
    if (i == r) return;
    ++v[i];
    for (int j = 0; j < i; ++j) v[j] = j;
  }
}

// Total edge coloring of K_{rn}^{(r)}. Holds the opaque ids as given plus a
// dense relabelling (first appearance in colex order) used by every
// algorithm. Whether it is proper is a separate question: see verify_proper.
class Coloring {
 public:
  // Throws ValidationError if colors.size() != edge_count.
  Coloring(Params params, std::vector<Color> colors);

  const Params& params() const { return params_; }
  std::size_t color_count() const { return palette_.size(); }

  std::span<const Color> colors() const { return colors_; }
  Color color(EdgeRank rank) const { return colors_[rank]; }
  Color color(const Edge& edge) const;

  DenseColor dense(EdgeRank rank) const { return dense_[rank]; }
  DenseColor dense(const Edge& edge) const;
  DenseColor pair_dense(Vertex u, Vertex v) const { return dense_[pair_rank(u, v)]; }
  Color original(DenseColor c) const { return palette_[c]; }

  // Same partition, ids remapped to 0 ... color_count-1.
  Coloring normalized() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.params_ == b.params_ && a.colors_ == b.colors_;
  }

 private:
  Params params_;
  std::vector<Color> colors_;
  std::vector<DenseColor> dense_;
  std::vector<Color> palette_;
};

struct ProperVerdict {
  bool ok = true;
  std::optional<std::pair<Edge, Edge>> witness;  // two intersecting same-colored edges
  explicit operator bool() const { return ok; }
};

ProperVerdict verify_proper(const Coloring& coloring);
// Throws ValidationError on a length mismatch (distinct from "improper").
ProperVerdict verify_proper(const Params& params, std::span<const Color> colors);

// True iff edges are n pairwise-disjoint edges covering every vertex.
// Malformed edges throw ValidationError.
bool verify_one_factor(const Params& params, std::span<const Edge> edges);

// True iff the colors of edges are pairwise distinct.
bool is_rainbow(std::span<const Edge> edges, const Coloring& coloring);

// Two edges of edges sharing a color, if any.
std::optional<std::pair<Edge, Edge>> rainbow_witness(std::span<const Edge> edges,
                                                     const Coloring& coloring);

// A set of pairwise-disjoint edges with a vertex-occupancy mask.
class Matching {
 public:
  explicit Matching(Params params);
  // Throws ValidationError if the edges are malformed or overlap.
  Matching(Params params, std::vector<Edge> edges);

  const Params& params() const { return params_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool covers(Vertex v) const { return occupied_[v]; }
  bool disjoint_from(const Edge& e) const;

  // Throws ValidationError if e overlaps the matching.
  void add(Edge e);
  void remove(std::size_t index);

  bool is_perfect() const { return static_cast<int>(edges_.size()) == params_.n(); }

  // Dense colors of the edges, in edge order.
  std::vector<DenseColor> used_colors(const Coloring& coloring) const;
  bool is_rainbow(const Coloring& coloring) const;

 private:
  Params params_;
  std::vector<Edge> edges_;
  std::vector<bool> occupied_;
};

// A verified perfect matching.
struct OneFactor {
  Params params;
  std::vector<Edge> edges;
};

}  // namespace rainbow

#endif  // RAINBOW_CORE_HPP_
