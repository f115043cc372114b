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

#ifndef DDCLUSTER_BNB_HPP_
#define DDCLUSTER_BNB_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>

#include "ddcluster/dd.hpp"
#include "ddcluster/strategies.hpp"

namespace ddc {

inline constexpr Weight kInfiniteBound = std::numeric_limits<Weight>::max();

struct Subproblem {
  VertexSet state;
  Weight prefix_value = 0;
  Weight dual_bound = kInfiniteBound;
  VertexSet fixed;  // vertices selected on the way to this subproblem
};

struct SolveResult {
  Weight optimum = 0;
  VertexSet best_set;
  std::uint64_t nodes_processed = 0;
  std::uint64_t candidate_evaluations = 0;
  std::uint64_t relaxed_compilations = 0;
  std::chrono::duration<double> wall_time{0};
};

enum class CutsetBound {
  kPerNode,       // longest path through each cutset node
  kWholeDiagram,  // relaxed bound for every cutset node
};

// Search state at the start of an iteration, before the next pop.
struct SearchSnapshot {
  Weight incumbent;
  Weight max_queued_dual;  // kInfiniteBound while the root is queued
  std::size_t queue_size;
};

enum class CompileKind { kRestricted, kRelaxed };

struct SolveOptions {
  CutsetBound cutset_bound = CutsetBound::kPerNode;
  std::function<void(const SearchSnapshot&)> on_iteration;
  // Called before each compilation with the subproblem being compiled; the
  // layer observer then receives that compilation's layers.
  std::function<void(CompileKind, const Subproblem&)> on_compile;
  LayerObserver layer_observer;
};

// Best-first DD branch-and-bound: restricted diagrams (static weight order)
// for primal bounds, relaxed diagrams (cfg strategy) for dual bounds, and
// branching on the last exact layer of the relaxed diagram.
SolveResult solve(const WeightedGraph& g, const StrategyConfig& cfg,
                  const SolveOptions& options = {});

}  // namespace ddc

#endif  // DDCLUSTER_BNB_HPP_
