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

#ifndef DDCLUSTER_STRATEGIES_HPP_
#define DDCLUSTER_STRATEGIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "ddcluster/clustering.hpp"
#include "ddcluster/ordering.hpp"

namespace ddc {

enum class Strategy { kBaseline, kCbc, kPas, kPasVo };

struct StrategyConfig {
  Strategy strategy = Strategy::kBaseline;
  ClusterPolicyKind policy = ClusterPolicyKind::kFixed;  // ignored by kBaseline
  std::size_t width = 100;
  std::uint64_t seed = 0;

  ClusterPolicy cluster_policy() const { return {policy, width}; }
};

// CLI-facing identifiers: baseline, cbc, pas, pas-vo / fixed, adaptive.
std::string_view strategy_name(Strategy s);
std::string_view policy_name(ClusterPolicyKind p);
std::optional<Strategy> parse_strategy(std::string_view name);
std::optional<ClusterPolicyKind> parse_policy(std::string_view name);

// Cluster-by-Cluster: clusters are visited in non-decreasing total weight
// (ties by id) and exhausted one at a time, MIN choosing within the active
// cluster.
class CbcOrderSource : public VariableOrderSource {
 public:
  explicit CbcOrderSource(Clustering clustering);
  Vertex next(const Layer& layer, DiagramStats& stats) override;

  const Clustering& clustering() const { return clustering_; }
  // Cluster ids in visiting order.
  const std::vector<int>& cluster_order() const { return order_; }

 private:
  Clustering clustering_;
  std::vector<int> order_;
  std::vector<std::vector<Vertex>> remaining_;
  std::size_t active_ = 0;
};

struct PickedVariable {
  Vertex vertex;
  std::size_t score;  // MIN count when picked
  Weight weight;
};

// Pick-and-Sort: each round picks one vertex per nonempty cluster by MIN
// against the current layer, sorts the batch, then emits it.
//   kByWeight: weight descending (PaS)
//   kByScore:  recorded MIN count ascending (PaS-VO)
// Ties go to the smaller vertex index.
class PasOrderSource : public VariableOrderSource {
 public:
  enum class SortKey { kByWeight, kByScore };

  PasOrderSource(const WeightedGraph& g, Clustering clustering, SortKey key);
  Vertex next(const Layer& layer, DiagramStats& stats) override;

  const Clustering& clustering() const { return clustering_; }
  const std::vector<std::size_t>& batch_sizes() const { return batch_sizes_; }

 private:
  const WeightedGraph* graph_;
  Clustering clustering_;
  SortKey key_;
  std::vector<std::vector<Vertex>> remaining_;
  std::vector<PickedVariable> batch_;
  std::size_t batch_pos_ = 0;
  std::vector<std::size_t> batch_sizes_;
};

// Order source for compiling the subproblem over s. Falls back to plain MIN
// over s for kBaseline and whenever |s| <= exactness_threshold(cfg.width).
std::unique_ptr<VariableOrderSource> make_order_source(const StrategyConfig& cfg,
                                                       const WeightedGraph& g,
                                                       const VertexSet& s);

}  // namespace ddc

#endif  // DDCLUSTER_STRATEGIES_HPP_
