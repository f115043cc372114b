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

#ifndef DDCLUSTER_LAYER_HPP_
#define DDCLUSTER_LAYER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ddcluster/vertex_set.hpp"

namespace ddc {

inline constexpr Vertex kNoVertex = -1;

// Best value reaching a node through a given cutset node.
struct CutTag {
  std::int32_t id;
  Weight value;
};

// A DD node. `value` is the longest known root-to-node path length.
//
// `path` holds the vertices selected on that longest path; it is only
// populated while path tracking is enabled (universe() == 0 otherwise).
// `tags` is only populated after the cutset is fixed and per-cutset bounds
// were requested; sorted by id.
struct Node {
  VertexSet state;
  Weight value = 0;
  VertexSet path;
  std::vector<CutTag> tags;
};

struct Layer {
  int index = 0;
  std::vector<Node> nodes;

  std::size_t width() const { return nodes.size(); }
};

struct DiagramStats {
  std::size_t max_width = 0;
  std::uint64_t merges = 0;    // nodes folded into a merged node (relaxed)
  std::uint64_t removals = 0;  // nodes dropped (restricted)
  std::uint64_t candidate_evaluations = 0;
  std::size_t layers_built = 0;
};

// Source of the next decision variable during top-down compilation. Stateful;
// one instance serves exactly one compilation.
class VariableOrderSource {
 public:
  virtual ~VariableOrderSource() = default;

  // Returns the vertex for the next layer given the current (last built)
  // layer, or kNoVertex when exhausted. Scoring work is charged to `stats`.
  virtual Vertex next(const Layer& layer, DiagramStats& stats) = 0;
};

}  // namespace ddc

#endif  // DDCLUSTER_LAYER_HPP_
