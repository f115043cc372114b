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

#include "ddcluster/ordering.hpp"

#include <algorithm>

#include "ddcluster/errors.hpp"

namespace ddc {

MinScore min_next(const Layer& layer, std::span<const Vertex> candidates, DiagramStats& stats) {
  DDC_REQUIRE(!candidates.empty(), "min_next needs at least one candidate");
  MinScore best;
  for (Vertex c : candidates) {
    std::size_t count = 0;
    for (const Node& n : layer.nodes) count += n.state.test(c) ? 1 : 0;
    if (best.vertex == kNoVertex || count < best.count ||
        (count == best.count && c < best.vertex)) {
      best = {c, count};
    }
  }
  stats.candidate_evaluations += candidates.size();
  return best;
}

std::vector<Vertex> static_weight_order(const WeightedGraph& g, const VertexSet& s) {
  std::vector<Vertex> order = s.to_vector();
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.weight(a) > g.weight(b); });
  return order;
}

MinOrderSource::MinOrderSource(std::vector<Vertex> candidates) : remaining_(std::move(candidates)) {
  std::sort(remaining_.begin(), remaining_.end());
}

Vertex MinOrderSource::next(const Layer& layer, DiagramStats& stats) {
  if (remaining_.empty()) return kNoVertex;
  const MinScore pick = min_next(layer, remaining_, stats);
  remaining_.erase(std::find(remaining_.begin(), remaining_.end(), pick.vertex));
  return pick.vertex;
}

}  // namespace ddc
