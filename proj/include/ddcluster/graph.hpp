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

#ifndef DDCLUSTER_GRAPH_HPP_
#define DDCLUSTER_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "ddcluster/vertex_set.hpp"

namespace ddc {

// Undirected vertex-weighted graph. Immutable once built; vertices are
// 0-based internally.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws ContractViolation on self-loops, out-of-range endpoints or
  // non-positive weights. Duplicate edges are ignored.
  WeightedGraph(std::vector<Weight> weights,
                const std::vector<std::pair<Vertex, Vertex>>& edges);

  Vertex num_vertices() const { return static_cast<Vertex>(weights_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  Weight weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<Weight>& weights() const { return weights_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).test(v); }

  VertexSet all_vertices() const { return VertexSet::Full(num_vertices()); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.weights_ == b.weights_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<Weight> weights_;
  std::vector<VertexSet> adj_;
  std::size_t num_edges_ = 0;
};

// Erdos-Renyi G(n, density): pairs (i < j) visited lexicographically, one
// uniform draw each from Xoshiro256(seed). Vertex i gets weight (i mod 100)+1.
WeightedGraph generate_instance(Vertex n, double density, std::uint64_t seed);

// Line-oriented text format:
//   c <comment>
//   p <n> <m>            (a DIMACS-style "p edge <n> <m>" is also accepted)
//   v <index> <weight>   one per vertex, 1-based
//   e <u> <v>            1-based; symmetrized, duplicates collapse
// Throws ParseError carrying the offending line number.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);
WeightedGraph load_graph(const std::string& path);

std::string serialize_graph(const WeightedGraph& g);
void save_graph(const WeightedGraph& g, const std::string& path);

// |adj(v) ∩ s|. Requires v ∈ s.
std::size_t induced_degree(const WeightedGraph& g, const VertexSet& s, Vertex v);

}  // namespace ddc

#endif  // DDCLUSTER_GRAPH_HPP_
