// Copyright 2026 The ddcluster Authors
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

// Test-only helpers: hand-built graphs, random generators that do not share
// code with the library, and a plain subset-enumeration oracle.

#ifndef DDCLUSTER_TESTS_TEST_SUPPORT_HPP_
#define DDCLUSTER_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "ddcluster/graph.hpp"
#include "ddcluster/layer.hpp"

namespace ddc::testing {

inline WeightedGraph make_graph(std::vector<Weight> weights,
                                std::vector<std::pair<Vertex, Vertex>> edges = {}) {
  return WeightedGraph(std::move(weights), edges);
}

inline WeightedGraph path3(Weight a, Weight b, Weight c) {
  return make_graph({a, b, c}, {{0, 1}, {1, 2}});
}

inline WeightedGraph complete(std::vector<Weight> weights) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto n = static_cast<Vertex>(weights.size());
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(std::move(weights), edges);
}

inline VertexSet set_of(Vertex universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

// G(n, p) with arbitrary weights in [1, max_weight], drawn from std::mt19937_64.
inline WeightedGraph random_graph(std::mt19937_64& rng, Vertex n, double p, Weight max_weight = 100) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Weight> wdist(1, max_weight);
  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (auto& w : weights) w = wdist(rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(i, j);
  return make_graph(std::move(weights), edges);
}

inline std::vector<Vertex> random_order(std::mt19937_64& rng, const VertexSet& s) {
  auto order = s.to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Max-weight independent subset of `within`, by checking every subset.
// Exponential in |within|; keep it at 20 or fewer vertices.
inline Weight subset_oracle(const WeightedGraph& g, const VertexSet& within) {
  const auto verts = within.to_vector();
  const std::size_t k = verts.size();
  Weight best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Weight sum = 0;
    bool independent = true;
    for (std::size_t i = 0; i < k && independent; ++i) {
      if (!((mask >> i) & 1)) continue;
      sum += g.weight(verts[i]);
      for (std::size_t j = i + 1; j < k; ++j) {
        if (((mask >> j) & 1) && g.adjacent(verts[i], verts[j])) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = std::max(best, sum);
  }
  return best;
}

inline Weight subset_oracle(const WeightedGraph& g) { return subset_oracle(g, g.all_vertices()); }

inline bool is_independent(const WeightedGraph& g, const VertexSet& s) {
  const auto vs = s.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline Weight total_weight(const WeightedGraph& g, const VertexSet& s) {
  Weight sum = 0;
  s.for_each([&](Vertex v) { sum += g.weight(v); });
  return sum;
}

// Wraps an order source and records what it emits.
class RecordingSource : public VariableOrderSource {
 public:
  explicit RecordingSource(VariableOrderSource& inner) : inner_(inner) {}
  Vertex next(const Layer& layer, DiagramStats& stats) override {
    const Vertex v = inner_.next(layer, stats);
    if (v != kNoVertex) emitted.push_back(v);
    return v;
  }
  std::vector<Vertex> emitted;

 private:
  VariableOrderSource& inner_;
};

}  // namespace ddc::testing

#endif  // DDCLUSTER_TESTS_TEST_SUPPORT_HPP_
