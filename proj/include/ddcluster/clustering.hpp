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

#ifndef DDCLUSTER_CLUSTERING_HPP_
#define DDCLUSTER_CLUSTERING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ddcluster/graph.hpp"

namespace ddc {

// [induced degree, weight], each min-max normalized over the clustered
// vertex set. A feature with a degenerate range normalizes to 0.
struct FeatureVector {
  double degree = 0.0;
  double weight = 0.0;
};

// Features for s.to_vector(), in that order.
std::vector<FeatureVector> vertex_features(const WeightedGraph& g, const VertexSet& s);

// Partition of a vertex set. Cluster ids are canonical: clusters are numbered
// by their smallest member, and each member list is ascending.
struct Clustering {
  std::vector<int> assignment;  // per graph vertex; -1 outside the clustered set
  std::vector<std::vector<Vertex>> clusters;
  std::vector<Weight> total_weights;

  std::size_t size() const { return clusters.size(); }
};

// Builds the canonical Clustering from per-vertex labels (-1 = not clustered).
Clustering make_clustering(const WeightedGraph& g, const std::vector<int>& labels);

enum class ClusterPolicyKind { kFixed, kAdaptive };

struct ClusterPolicy {
  ClusterPolicyKind kind = ClusterPolicyKind::kFixed;
  std::size_t width = 100;
};

// 2 * ceil(log2 W): subproblems at most this large compile exactly at width W
// when W is a power of two.
std::size_t exactness_threshold(std::size_t width);

// fixed: 2. adaptive: max(floor(R/2), 1) with R = floor(n_sub / threshold(W)).
// Capped at n_sub.
std::size_t cluster_count(const ClusterPolicy& policy, std::size_t n_sub);

// Lloyd's k-means with k-means++ seeding on vertex_features(g, s). Stops when
// assignments are stable or after 100 iterations; empty clusters are refilled
// with the point farthest from its centroid.
Clustering kmeans(const WeightedGraph& g, const VertexSet& s, std::size_t n_clusters,
                  std::uint64_t seed);

}  // namespace ddc

#endif  // DDCLUSTER_CLUSTERING_HPP_
