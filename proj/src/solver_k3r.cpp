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

// Rainbow 1-factor of a properly colored K_{3r}^{(r)}.
//
// If two disjoint edges m1, m2 share a color, any split of V - m1 into
// (m, m*) with {m1, m, m*} not rainbow forces C(m) = C(m*) and makes
// {m, m*} a whole color class; the same holds around m2. With
//   x_1..x_r = m1,  x_{r+1}..x_{2r} = m2,  x_{2r+1}..x_{3r} = the rest,
// the factor
//   {x_{r+1},...,x_{2r-1},x_{2r+1}}, {x_1,x_{2r+2},...,x_{3r}}, {x_2,...,x_r,x_{2r}}
// is then rainbow: its first two edges come from distinct two-edge classes
// and the third edge is in neither.

#include <algorithm>
#include <unordered_map>

#include "rainbow/solver.hpp"
#include "solver_internal.hpp"

namespace rainbow {
namespace {

std::vector<Vertex> complement(int vertex_count, std::initializer_list<const Edge*> used) {
  std::vector<bool> taken(vertex_count, false);
  for (const Edge* e : used) {
    for (Vertex v : *e) taken[v] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (!taken[v]) out.push_back(v);
  }
  return out;
}

// Splits of `pool` (2r vertices) into two r-sets, each once: the first part
// holds pool[0]; parts enumerated by colex rank of their local positions.
template <typename Fn>
bool for_each_split(const std::vector<Vertex>& pool, int r, Fn&& fn) {
  const Params local(r, 2);
  bool stop = false;
  for_each_edge(local, [&](EdgeRank, std::span<const Vertex> positions) {
    if (stop || positions[0] != 0) return;
    std::vector<Vertex> a, b;
    std::size_t next = 0;
    for (int j = 0; j < 2 * r; ++j) {
      if (next < positions.size() && positions[next] == j) {
        a.push_back(pool[j]);
        ++next;
      } else {
        b.push_back(pool[j]);
      }
    }
    stop = fn(Edge(std::move(a)), Edge(std::move(b)));
  });
  return stop;
}

}  // namespace

std::pair<OneFactor, K3rCertificate> solve_k3r(const Coloring& coloring) {
  const Params& params = coloring.params();
  if (params.n() != 3) throw ValidationError("solve_k3r needs n = 3");
  detail::require_proper(coloring);
  const int r = params.r();
  const int vc = params.vertex_count();

  K3rCertificate cert;
  auto finish = [&]() -> std::pair<OneFactor, K3rCertificate> {
    if (!verify_one_factor(params, cert.factor)) {
      throw std::logic_error("solve_k3r built something that is not a 1-factor");
    }
    if (!is_rainbow(cert.factor, coloring)) {
      throw TheoremContradiction(std::string("solve_k3r: ") + to_string(cert.mode) +
                                 " factor is not rainbow");
    }
    return {OneFactor{params, cert.factor}, cert};
  };

  // First color repeat in colex order.
  std::unordered_map<DenseColor, EdgeRank> first_seen;
  std::optional<std::pair<EdgeRank, EdgeRank>> repeat;
  for (EdgeRank e = 0; e < params.edge_count() && !repeat; ++e) {
    auto [it, inserted] = first_seen.try_emplace(coloring.dense(e), e);
    if (!inserted) repeat = std::make_pair(it->second, e);
  }

  if (!repeat) {
    cert.mode = K3rMode::kAllIndependentDistinct;
    const Matching greedy = greedy_rainbow_matching(coloring);
    cert.factor.assign(greedy.edges().begin(), greedy.edges().end());
    return finish();
  }

  const Edge m1 = unrank_edge(repeat->first, params);
  const Edge m2 = unrank_edge(repeat->second, params);
  cert.m1 = m1;
  cert.m2 = m2;

  auto search_around = [&](const Edge& fixed, const Edge& other) {
    return for_each_split(complement(vc, {&fixed}), r, [&](Edge a, Edge b) {
      if (a == other || b == other) return false;
      const std::vector<Edge> triple{fixed, a, b};
      if (is_rainbow(triple, coloring)) {
        cert.factor = triple;
        return true;
      }
      cert.tried.emplace_back(std::move(a), std::move(b));
      return false;
    });
  };
  if (search_around(m1, m2) || search_around(m2, m1)) {
    cert.mode = K3rMode::kDirectTriple;
    return finish();
  }

  cert.mode = K3rMode::kFallbackTriple;
  std::vector<Vertex> x(m1.begin(), m1.end());
  x.insert(x.end(), m2.begin(), m2.end());
  const auto rest = complement(vc, {&m1, &m2});
  x.insert(x.end(), rest.begin(), rest.end());
  // 0-based: x[0..r-1] = m1, x[r..2r-1] = m2, x[2r..3r-1] = rest.
  std::vector<Vertex> first(x.begin() + r, x.begin() + 2 * r - 1);
  first.push_back(x[2 * r]);
  std::vector<Vertex> second{x[0]};
  second.insert(second.end(), x.begin() + 2 * r + 1, x.end());
  std::vector<Vertex> third(x.begin() + 1, x.begin() + r);
  third.push_back(x[2 * r - 1]);
  cert.factor = {Edge(std::move(first)), Edge(std::move(second)), Edge(std::move(third))};
  return finish();
}

}  // namespace rainbow
