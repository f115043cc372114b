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

#ifndef DDCLUSTER_DD_HPP_
#define DDCLUSTER_DD_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "ddcluster/graph.hpp"
#include "ddcluster/layer.hpp"

namespace ddc {

// Top-down compilation of decision diagrams for the weighted independent set
// DP. A state is the set of vertices still available; deciding vertex v:
//   d = 0: S \ {v}                       reward 0
//   d = 1: S \ ({v} ∪ adj(v)), v ∈ S     reward w(v)
// Nodes with equal states in a layer are always merged (keeping the larger
// value), which is exact for this DP.

enum class DiagramMode { kExact, kRelaxed, kRestricted };

// Throws ContractViolation when d == 1 and v ∉ s.
VertexSet transition(const WeightedGraph& g, const VertexSet& s, Vertex v, bool take);
Weight reward(const WeightedGraph& g, Vertex v, bool take);

// Orders nodes by value descending, then state lexicographically ascending.
bool node_priority_less(const Node& a, const Node& b);

// Keeps the width-1 best nodes and merges the rest (state union, max value).
// If the merged state coincides with a kept node the two are unified, so the
// result may be one narrower than `width`. Requires |layer| > width >= 2.
Layer relax_layer(Layer layer, std::size_t width, DiagramStats* stats = nullptr);

// Keeps the `width` best nodes. No-op when |layer| <= width.
Layer restrict_layer(Layer layer, std::size_t width, DiagramStats* stats = nullptr);

// Expands every node of `prev` on vertex v, deduplicates by state, then
// enforces `width` according to `mode` (ignored for kExact).
Layer build_layer(const WeightedGraph& g, const Layer& prev, Vertex v, std::size_t width,
                  DiagramMode mode, DiagramStats& stats);

struct LayerTrace {
  int index;  // 1-based index of the built layer below the root
  Vertex var;
  std::size_t width_pre;
  std::size_t width_post;
  std::uint64_t merged;
  std::uint64_t removed;
  std::uint64_t candidate_evaluations;  // charged by the order source for this layer
};

using LayerObserver = std::function<void(const LayerTrace&)>;

struct CompileOptions {
  // Record the selected vertices along best paths. Relaxed diagrams stop
  // tracking once the first width violation occurs.
  bool track_paths = false;
  // Attribute terminal values to individual cutset nodes.
  bool cutset_bounds = false;
  LayerObserver observer;
};

struct CompiledDiagram {
  Weight bound = 0;
  bool is_exact = true;
  // Deepest layer built before the first width violation; the terminal layer
  // when the diagram is exact.
  Layer last_exact_layer;
  // Parallel to last_exact_layer.nodes when CompileOptions::cutset_bounds is
  // set: longest root-terminal path through each cutset node.
  std::vector<Weight> cutset_bounds;
  Layer terminal;
  DiagramStats stats;
};

// Compiles a diagram over the vertices of root.state. `width` is ignored for
// kExact. Throws ContractViolation if the order source repeats a vertex,
// yields one outside root.state, or runs dry early.
CompiledDiagram compile(const WeightedGraph& g, const Node& root, VariableOrderSource& source,
                        std::size_t width, DiagramMode mode, const CompileOptions& options = {});

inline Weight longest_path_bound(const CompiledDiagram& d) { return d.bound; }

// Vertices of a maximum-value root-terminal path. Requires path tracking on a
// restricted or exact diagram.
VertexSet best_set_extract(const CompiledDiagram& d);

}  // namespace ddc

#endif  // DDCLUSTER_DD_HPP_
