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

#include "ddcluster/clustering.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ddcluster/errors.hpp"
#include "ddcluster/rng.hpp"

namespace ddc {
namespace {

constexpr int kMaxIterations = 100;

double Dist2(const FeatureVector& a, const FeatureVector& b) {
  const double dd = a.degree - b.degree;
  const double dw = a.weight - b.weight;
  return dd * dd + dw * dw;
}

void Normalize(std::vector<double>& xs) {
  if (xs.empty()) return;
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  const double min = *lo, range = *hi - *lo;
  for (double& x : xs) x = range > 0 ? (x - min) / range : 0.0;
}

std::vector<std::size_t> SeedPlusPlus(const std::vector<FeatureVector>& pts, std::size_t k,
                                      Xoshiro256& rng) {
  const std::size_t m = pts.size();
  std::vector<std::size_t> chosen;
  std::vector<bool> is_center(m, false);
  std::vector<double> d2(m, std::numeric_limits<double>::infinity());

  auto add = [&](std::size_t idx) {
    chosen.push_back(idx);
    is_center[idx] = true;
    for (std::size_t i = 0; i < m; ++i) d2[i] = std::min(d2[i], Dist2(pts[i], pts[idx]));
  };

  add(std::min(m - 1, static_cast<std::size_t>(rng.uniform() * static_cast<double>(m))));
  while (chosen.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (!is_center[i]) total += d2[i];
    std::size_t pick = m;
    if (total > 0.0) {
      const double r = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (is_center[i] || d2[i] <= 0.0) continue;
        acc += d2[i];
        pick = i;
        if (acc > r) break;
      }
    } else {
      // Only duplicates of existing centers remain.
      for (std::size_t i = 0; i < m && pick == m; ++i)
        if (!is_center[i]) pick = i;
    }
    add(pick);
  }
  return chosen;
}

}  // namespace

std::vector<FeatureVector> vertex_features(const WeightedGraph& g, const VertexSet& s) {
  const auto verts = s.to_vector();
  std::vector<double> deg, wt;
  deg.reserve(verts.size());
  wt.reserve(verts.size());
  for (Vertex v : verts) {
    deg.push_back(static_cast<double>(induced_degree(g, s, v)));
    wt.push_back(static_cast<double>(g.weight(v)));
  }
  Normalize(deg);
  Normalize(wt);
  std::vector<FeatureVector> out(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) out[i] = {deg[i], wt[i]};
  return out;
}

Clustering make_clustering(const WeightedGraph& g, const std::vector<int>& labels) {
  // Renumber labels by first appearance in ascending vertex order.
  std::vector<int> remap;
  Clustering c;
  c.assignment.assign(labels.size(), -1);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const int l = labels[v];
    if (l < 0) continue;
    if (static_cast<std::size_t>(l) >= remap.size()) remap.resize(static_cast<std::size_t>(l) + 1, -1);
    if (remap[l] < 0) {
      remap[l] = static_cast<int>(c.clusters.size());
      c.clusters.emplace_back();
      c.total_weights.push_back(0);
    }
    const int id = remap[l];
    c.assignment[v] = id;
    c.clusters[id].push_back(static_cast<Vertex>(v));
    c.total_weights[id] += g.weight(static_cast<Vertex>(v));
  }
  return c;
}

std::size_t exactness_threshold(std::size_t width) {
  DDC_REQUIRE(width >= 2, "width must be at least 2");
  return 2 * static_cast<std::size_t>(std::bit_width(width - 1));
}

std::size_t cluster_count(const ClusterPolicy& policy, std::size_t n_sub) {
  DDC_REQUIRE(n_sub >= 1, "empty subproblem");
  std::size_t nc = 2;
  if (policy.kind == ClusterPolicyKind::kAdaptive) {
    const std::size_t r = n_sub / exactness_threshold(policy.width);
    nc = std::max<std::size_t>(r / 2, 1);
  }
  return std::min(nc, n_sub);
}

Clustering kmeans(const WeightedGraph& g, const VertexSet& s, std::size_t n_clusters,
                  std::uint64_t seed) {
  const auto verts = s.to_vector();
  const std::size_t m = verts.size();
  const std::size_t k = n_clusters;
  DDC_REQUIRE(k >= 1 && k <= m, "cluster count must lie in [1, |s|]");

  const auto pts = vertex_features(g, s);
  Xoshiro256 rng(seed);
  std::vector<FeatureVector> centroid;
  for (std::size_t idx : SeedPlusPlus(pts, k, rng)) centroid.push_back(pts[idx]);

  std::vector<int> label(m, -1);
  std::vector<std::size_t> size(k, 0);

  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < m; ++i) {
      // Ties keep the current cluster, otherwise go to the lowest id.
      int best = label[i];
      double best_d = best >= 0 ? Dist2(pts[i], centroid[best]) : std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = Dist2(pts[i], centroid[c]);
        if (d < best_d) {
          best = static_cast<int>(c);
          best_d = d;
        }
      }
      if (best != label[i]) {
        label[i] = best;
        changed = true;
      }
    }

    std::fill(size.begin(), size.end(), 0);
    for (int l : label) ++size[l];
    for (std::size_t e = 0; e < k; ++e) {
      if (size[e] != 0) continue;
      std::size_t far = m;
      double far_d = -1.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (size[label[i]] <= 1) continue;
        const double d = Dist2(pts[i], centroid[label[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --size[label[far]];
      label[far] = static_cast<int>(e);
      size[e] = 1;
      centroid[e] = pts[far];
      changed = true;
    }

    if (!changed) break;
    std::vector<FeatureVector> sum(k);
    for (std::size_t i = 0; i < m; ++i) {
      sum[label[i]].degree += pts[i].degree;
      sum[label[i]].weight += pts[i].weight;
    }
    for (std::size_t c = 0; c < k; ++c) {
      centroid[c] = {sum[c].degree / static_cast<double>(size[c]),
                     sum[c].weight / static_cast<double>(size[c])};
    }
  }

  std::vector<int> per_vertex(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < m; ++i) per_vertex[verts[i]] = label[i];
  return make_clustering(g, per_vertex);
}

}  // namespace ddc
