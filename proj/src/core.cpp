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

#include "rainbow/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace rainbow {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > ~std::uint64_t{0}) {
      throw CapacityError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

Params::Params(int r, int n) : r_(r), n_(n), edge_count_(0) {
  if (r < 2) throw ValidationError("r must be at least 2, got " + std::to_string(r));
  if (n < 1) throw ValidationError("n must be at least 1, got " + std::to_string(n));
  if (static_cast<std::int64_t>(r) * n > (1 << 24)) {
    throw CapacityError("vertex count r*n too large");
  }
  edge_count_ = binomial(static_cast<std::uint64_t>(r) * n, r);
}

std::uint64_t Params::degree() const {
  return binomial(static_cast<std::uint64_t>(vertex_count()) - 1, r_ - 1);
}

Edge::Edge(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
}

Edge::Edge(std::initializer_list<Vertex> vertices) : Edge(std::vector<Vertex>(vertices)) {}

bool Edge::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Edge::intersects(const Edge& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

void Edge::validate(const Params& params) const {
  if (static_cast<int>(vertices_.size()) != params.r()) {
    throw ValidationError("edge " + to_string() + " has " + std::to_string(vertices_.size()) +
                          " vertices, expected " + std::to_string(params.r()));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0 || vertices_[i] >= params.vertex_count()) {
      throw ValidationError("edge " + to_string() + " has a vertex outside 0.." +
                            std::to_string(params.vertex_count() - 1));
    }
    if (i > 0 && vertices_[i] == vertices_[i - 1]) {
      throw ValidationError("edge " + to_string() + " repeats vertex " +
                            std::to_string(vertices_[i]));
    }
  }
}

bool colex_less(const Edge& a, const Edge& b) {
  return std::lexicographical_compare(a.vertices_.rbegin(), a.vertices_.rend(),
                                      b.vertices_.rbegin(), b.vertices_.rend());
}

std::string Edge::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out << ',';
    out << vertices_[i];
  }
  out << '}';
  return out.str();
}

EdgeRank rank_edge(const Edge& edge, const Params& params) {
  edge.validate(params);
  EdgeRank rank = 0;
  for (std::size_t i = 0; i < edge.size(); ++i) rank += binomial(edge[i], i + 1);
  return rank;
}

Edge unrank_edge(EdgeRank index, const Params& params) {
  if (index >= params.edge_count()) {
    throw ValidationError("edge index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(params.edge_count()) + ")");
  }
  const int r = params.r();
  std::vector<Vertex> v(r);
  EdgeRank rem = index;
  Vertex upper = params.vertex_count();  // exclusive
  for (int i = r; i >= 1; --i) {
    // largest x in [i-1, upper) with C(x, i) <= rem
    Vertex lo = i - 1;
    Vertex hi = upper - 1;
    while (lo < hi) {
      Vertex mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, i) <= rem) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    v[i - 1] = lo;
    rem -= binomial(lo, i);
    upper = lo;
  }
  return Edge(std::move(v));
}

Coloring::Coloring(Params params, std::vector<Color> colors)
    : params_(params), colors_(std::move(colors)) {
  if (params_.edge_count() > kMaxEdgeCount) {
    throw CapacityError("instance has " + std::to_string(params_.edge_count()) +
                        " edges, more than the supported " + std::to_string(kMaxEdgeCount));
  }
  if (colors_.size() != params_.edge_count()) {
    throw ValidationError("coloring has " + std::to_string(colors_.size()) +
                          " entries, expected C(" + std::to_string(params_.vertex_count()) +
                          "," + std::to_string(params_.r()) +
                          ") = " + std::to_string(params_.edge_count()));
  }
  dense_.resize(colors_.size());
  std::unordered_map<Color, DenseColor> ids;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(colors_[i], static_cast<DenseColor>(palette_.size()));
    if (inserted) palette_.push_back(colors_[i]);
    dense_[i] = it->second;
  }
}

Color Coloring::color(const Edge& edge) const { return colors_[rank_edge(edge, params_)]; }

DenseColor Coloring::dense(const Edge& edge) const { return dense_[rank_edge(edge, params_)]; }

Coloring Coloring::normalized() const {
  return Coloring(params_, std::vector<Color>(dense_.begin(), dense_.end()));
}

ProperVerdict verify_proper(const Coloring& coloring) {
  const Params& params = coloring.params();
  const std::size_t classes = coloring.color_count();
  const std::uint64_t edges = params.edge_count();

  // Bucket ranks by color (counting sort, stable in rank order).
  std::vector<std::uint64_t> start(classes + 1, 0);
  for (EdgeRank e = 0; e < edges; ++e) ++start[coloring.dense(e) + 1];
  for (std::size_t c = 0; c < classes; ++c) start[c + 1] += start[c];
  std::vector<EdgeRank> order(edges);
  {
    std::vector<std::uint64_t> fill(start.begin(), start.end() - 1);
    for (EdgeRank e = 0; e < edges; ++e) order[fill[coloring.dense(e)]++] = e;
  }

  // Within a class every vertex may be claimed once.
  std::vector<std::uint32_t> stamp(params.vertex_count(), 0);
  std::vector<EdgeRank> claimer(params.vertex_count(), 0);
  for (std::size_t c = 0; c < classes; ++c) {
    const auto mark = static_cast<std::uint32_t>(c + 1);
    for (std::uint64_t i = start[c]; i < start[c + 1]; ++i) {
      const EdgeRank e = order[i];
      const Edge edge = unrank_edge(e, params);
      for (Vertex v : edge) {
        if (stamp[v] == mark) {
          return {false, std::make_pair(unrank_edge(claimer[v], params), edge)};
        }
        stamp[v] = mark;
        claimer[v] = e;
      }
    }
  }
  return {};
}

ProperVerdict verify_proper(const Params& params, std::span<const Color> colors) {
  return verify_proper(Coloring(params, std::vector<Color>(colors.begin(), colors.end())));
}

bool verify_one_factor(const Params& params, std::span<const Edge> edges) {
  for (const Edge& e : edges) e.validate(params);
  if (static_cast<int>(edges.size()) != params.n()) return false;
  std::vector<bool> seen(params.vertex_count(), false);
  for (const Edge& e : edges) {
    for (Vertex v : e) {
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  // n disjoint r-sets inside rn vertices cover everything.
  return true;
}

std::optional<std::pair<Edge, Edge>> rainbow_witness(std::span<const Edge> edges,
                                                     const Coloring& coloring) {
  std::unordered_map<DenseColor, std::size_t> first;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [it, inserted] = first.try_emplace(coloring.dense(edges[i]), i);
    if (!inserted) return std::make_pair(edges[it->second], edges[i]);
  }
  return std::nullopt;
}

bool is_rainbow(std::span<const Edge> edges, const Coloring& coloring) {
  return !rainbow_witness(edges, coloring).has_value();
}

Matching::Matching(Params params)
    : params_(params), occupied_(params.vertex_count(), false) {}

Matching::Matching(Params params, std::vector<Edge> edges) : Matching(params) {
  edges_.reserve(edges.size());
  for (Edge& e : edges) add(std::move(e));
}

bool Matching::disjoint_from(const Edge& e) const {
  for (Vertex v : e) {
    if (occupied_[v]) return false;
  }
  return true;
}

void Matching::add(Edge e) {
  e.validate(params_);
  if (!disjoint_from(e)) {
    throw ValidationError("edge " + e.to_string() + " overlaps the matching");
  }
  for (Vertex v : e) occupied_[v] = true;
  edges_.push_back(std::move(e));
}

void Matching::remove(std::size_t index) {
  for (Vertex v : edges_.at(index)) occupied_[v] = false;
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
}

std::vector<DenseColor> Matching::used_colors(const Coloring& coloring) const {
  std::vector<DenseColor> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(coloring.dense(e));
  return out;
}

bool Matching::is_rainbow(const Coloring& coloring) const {
  return rainbow::is_rainbow(edges_, coloring);
}

}  // namespace rainbow
