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

// Mutable rainbow matching in K_{2n} over dense colors. Internal to the
// augmentation search and the trace analysis.

#ifndef RAINBOW_SRC_GRAPH_STATE_HPP_
#define RAINBOW_SRC_GRAPH_STATE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow::detail {

class GraphState {
 public:
  // Caller guarantees r = 2 and a rainbow matching.
  GraphState(const Coloring& coloring, const Matching& matching)
      : coloring_(&coloring),
        vertex_count_(coloring.params().vertex_count()),
        mate_(vertex_count_, -1),
        owner_(coloring.color_count(), -1) {
    for (const Edge& e : matching.edges()) add(e[0], e[1]);
  }

  int vertex_count() const { return vertex_count_; }
  int size() const { return size_; }
  const Coloring& coloring() const { return *coloring_; }

  DenseColor color(Vertex u, Vertex v) const { return coloring_->pair_dense(u, v); }
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool matched(Vertex v) const { return mate_[v] >= 0; }
  // A vertex of the matching edge colored c, or -1 when c is in F(M).
  Vertex owner(DenseColor c) const { return owner_[c]; }
  bool is_free(DenseColor c) const { return owner_[c] < 0; }

  void add(Vertex u, Vertex v) {
    mate_[u] = v;
    mate_[v] = u;
    owner_[color(u, v)] = u;
    ++size_;
  }

  void remove(Vertex u, Vertex v) {
    mate_[u] = -1;
    mate_[v] = -1;
    owner_[color(u, v)] = -1;
    --size_;
  }

  std::vector<Vertex> unmatched() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count_; ++v) {
      if (mate_[v] < 0) out.push_back(v);
    }
    return out;
  }

  // First (in vertex-pair order) edge between unmatched vertices whose
  // color is free.
  std::optional<std::pair<Vertex, Vertex>> trivial_extension() const {
    const auto free_vertices = unmatched();
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < free_vertices.size(); ++j) {
        if (is_free(color(free_vertices[i], free_vertices[j]))) {
          return std::make_pair(free_vertices[i], free_vertices[j]);
        }
      }
    }
    return std::nullopt;
  }

  // Swapping {a, b} for {s, a} and {b, end} keeps the matching rainbow.
  // Requires s, end unmatched and {a, b} matched.
  bool swap_is_rainbow(Vertex s, Vertex a, Vertex b, Vertex end) const {
    const DenseColor first = color(s, a);
    const DenseColor third = color(b, end);
    const DenseColor middle = color(a, b);
    const bool first_ok = is_free(first) || first == middle;
    const bool third_ok = is_free(third) || third == middle;
    return first_ok && third_ok && first != third;
  }

  Matching to_matching() const {
    Matching out(coloring_->params());
    for (Vertex v = 0; v < vertex_count_; ++v) {
      if (mate_[v] > v) out.add(Edge{v, mate_[v]});
    }
    return out;
  }

 private:
  const Coloring* coloring_;
  int vertex_count_;
  int size_ = 0;
  std::vector<Vertex> mate_;
  std::vector<Vertex> owner_;
};

}  // namespace rainbow::detail

#endif  // RAINBOW_SRC_GRAPH_STATE_HPP_
