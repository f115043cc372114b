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

#include "ddcluster/strategies.hpp"

#include <algorithm>
#include <numeric>

namespace ddc {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kBaseline: return "baseline";
    case Strategy::kCbc: return "cbc";
    case Strategy::kPas: return "pas";
    case Strategy::kPasVo: return "pas-vo";
  }
  return "?";
}

std::string_view policy_name(ClusterPolicyKind p) {
  return p == ClusterPolicyKind::kFixed ? "fixed" : "adaptive";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kBaseline, Strategy::kCbc, Strategy::kPas, Strategy::kPasVo})
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

std::optional<ClusterPolicyKind> parse_policy(std::string_view name) {
  if (name == "fixed") return ClusterPolicyKind::kFixed;
  if (name == "adaptive") return ClusterPolicyKind::kAdaptive;
  return std::nullopt;
}

CbcOrderSource::CbcOrderSource(Clustering clustering)
    : clustering_(std::move(clustering)), remaining_(clustering_.clusters) {
  order_.resize(clustering_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
    return clustering_.total_weights[a] < clustering_.total_weights[b];
  });
}

Vertex CbcOrderSource::next(const Layer& layer, DiagramStats& stats) {
  while (active_ < order_.size() && remaining_[order_[active_]].empty()) ++active_;
  if (active_ == order_.size()) return kNoVertex;
  auto& pool = remaining_[order_[active_]];
  const MinScore pick = min_next(layer, pool, stats);
  pool.erase(std::find(pool.begin(), pool.end(), pick.vertex));
  return pick.vertex;
}

PasOrderSource::PasOrderSource(const WeightedGraph& g, Clustering clustering, SortKey key)
    : graph_(&g), clustering_(std::move(clustering)), key_(key), remaining_(clustering_.clusters) {}

Vertex PasOrderSource::next(const Layer& layer, DiagramStats& stats) {
  if (batch_pos_ == batch_.size()) {
    batch_.clear();
    batch_pos_ = 0;
    for (auto& pool : remaining_) {
      if (pool.empty()) continue;
      const MinScore pick = min_next(layer, pool, stats);
      pool.erase(std::find(pool.begin(), pool.end(), pick.vertex));
      batch_.push_back({pick.vertex, pick.count, graph_->weight(pick.vertex)});
    }
    if (batch_.empty()) return kNoVertex;
    if (key_ == SortKey::kByWeight) {
      std::sort(batch_.begin(), batch_.end(), [](const PickedVariable& a, const PickedVariable& b) {
        return a.weight != b.weight ? a.weight > b.weight : a.vertex < b.vertex;
      });
    } else {
      std::sort(batch_.begin(), batch_.end(), [](const PickedVariable& a, const PickedVariable& b) {
        return a.score != b.score ? a.score < b.score : a.vertex < b.vertex;
      });
    }
    batch_sizes_.push_back(batch_.size());
  }
  return batch_[batch_pos_++].vertex;
}

std::unique_ptr<VariableOrderSource> make_order_source(const StrategyConfig& cfg,
                                                       const WeightedGraph& g,
                                                       const VertexSet& s) {
  const std::size_t n_sub = s.count();
  if (cfg.strategy == Strategy::kBaseline || n_sub <= exactness_threshold(cfg.width)) {
    return std::make_unique<MinOrderSource>(s.to_vector());
  }
  const std::size_t nc = cluster_count(cfg.cluster_policy(), n_sub);
  Clustering clusters = kmeans(g, s, nc, cfg.seed);
  switch (cfg.strategy) {
    case Strategy::kCbc:
      return std::make_unique<CbcOrderSource>(std::move(clusters));
    case Strategy::kPas:
      return std::make_unique<PasOrderSource>(g, std::move(clusters),
                                              PasOrderSource::SortKey::kByWeight);
    case Strategy::kPasVo:
      return std::make_unique<PasOrderSource>(g, std::move(clusters),
                                              PasOrderSource::SortKey::kByScore);
    case Strategy::kBaseline:
      break;
  }
  return std::make_unique<MinOrderSource>(s.to_vector());
}

}  // namespace ddc
