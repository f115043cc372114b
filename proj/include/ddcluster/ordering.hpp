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

#ifndef DDCLUSTER_ORDERING_HPP_
#define DDCLUSTER_ORDERING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ddcluster/graph.hpp"
#include "ddcluster/layer.hpp"

namespace ddc {

struct MinScore {
  Vertex vertex = kNoVertex;
  std::size_t count = 0;
};

// MIN heuristic: the candidate appearing in the fewest states of `layer`,
// ties to the smallest index. Charges |candidates| evaluations to `stats`.
MinScore min_next(const Layer& layer, std::span<const Vertex> candidates, DiagramStats& stats);

// Vertices of s by weight descending, ties by ascending index.
std::vector<Vertex> static_weight_order(const WeightedGraph& g, const VertexSet& s);

// Dynamic MIN over a fixed candidate pool, each vertex yielded once.
class MinOrderSource : public VariableOrderSource {
 public:
  explicit MinOrderSource(std::vector<Vertex> candidates);
  Vertex next(const Layer& layer, DiagramStats& stats) override;

 private:
  std::vector<Vertex> remaining_;
};

class StaticOrderSource : public VariableOrderSource {
 public:
  explicit StaticOrderSource(std::vector<Vertex> order) : order_(std::move(order)) {}
  Vertex next(const Layer&, DiagramStats&) override {
    return pos_ < order_.size() ? order_[pos_++] : kNoVertex;
  }

 private:
  std::vector<Vertex> order_;
  std::size_t pos_ = 0;
};

}  // namespace ddc

#endif  // DDCLUSTER_ORDERING_HPP_
