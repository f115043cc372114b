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

#include "ddcluster/bnb.hpp"

#include <set>
#include <unordered_map>

#include "ddcluster/errors.hpp"

namespace ddc {
namespace {

struct QueueEntry {
  Weight dual;
  Weight prefix;
  VertexSet state;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.dual != b.dual) return a.dual > b.dual;
    if (a.prefix != b.prefix) return a.prefix > b.prefix;
    return lex_less(a.state, b.state);
  }
};

// Best-first open list; subproblems sharing a state are merged.
class OpenList {
 public:
  bool empty() const { return order_.empty(); }
  std::size_t size() const { return order_.size(); }
  Weight max_dual() const { return order_.begin()->dual; }

  void push(Subproblem sp) {
    auto it = by_state_.find(sp.state);
    if (it != by_state_.end()) {
      Subproblem& cur = it->second;
      order_.erase(QueueEntry{cur.dual_bound, cur.prefix_value, cur.state});
      if (sp.prefix_value > cur.prefix_value) {
        cur.prefix_value = sp.prefix_value;
        cur.fixed = std::move(sp.fixed);
      }
      cur.dual_bound = std::max(cur.dual_bound, sp.dual_bound);
      order_.insert(QueueEntry{cur.dual_bound, cur.prefix_value, cur.state});
      return;
    }
    order_.insert(QueueEntry{sp.dual_bound, sp.prefix_value, sp.state});
    VertexSet key = sp.state;
    by_state_.emplace(std::move(key), std::move(sp));
  }

  Subproblem pop() {
    auto first = order_.begin();
    auto it = by_state_.find(first->state);
    Subproblem sp = std::move(it->second);
    by_state_.erase(it);
    order_.erase(first);
    return sp;
  }

 private:
  std::set<QueueEntry, QueueOrder> order_;
  std::unordered_map<VertexSet, Subproblem, VertexSetHash> by_state_;
};

}  // namespace

SolveResult solve(const WeightedGraph& g, const StrategyConfig& cfg, const SolveOptions& options) {
  DDC_REQUIRE(cfg.width >= 2, "width must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  const Vertex n = g.num_vertices();

  SolveResult result;
  result.best_set = VertexSet(n);
  Weight incumbent = 0;

  OpenList open;
  open.push(Subproblem{g.all_vertices(), 0, kInfiniteBound, VertexSet(n)});

  CompileOptions restricted_opts;
  restricted_opts.track_paths = true;
  restricted_opts.observer = options.layer_observer;
  CompileOptions relaxed_opts;
  relaxed_opts.track_paths = true;
  relaxed_opts.cutset_bounds = options.cutset_bound == CutsetBound::kPerNode;
  relaxed_opts.observer = options.layer_observer;

  while (!open.empty()) {
    if (options.on_iteration) options.on_iteration({incumbent, open.max_dual(), open.size()});
    Subproblem sp = open.pop();
    if (sp.dual_bound <= incumbent) continue;
    ++result.nodes_processed;
    const Node root{sp.state, 0, {}, {}};

    if (options.on_compile) options.on_compile(CompileKind::kRestricted, sp);
    StaticOrderSource static_order(static_weight_order(g, sp.state));
    const CompiledDiagram restricted =
        compile(g, root, static_order, cfg.width, DiagramMode::kRestricted, restricted_opts);
    result.candidate_evaluations += restricted.stats.candidate_evaluations;
    if (sp.prefix_value + restricted.bound > incumbent) {
      incumbent = sp.prefix_value + restricted.bound;
      result.best_set = sp.fixed;
      result.best_set |= best_set_extract(restricted);
    }
    if (restricted.is_exact) continue;

    if (options.on_compile) options.on_compile(CompileKind::kRelaxed, sp);
    auto source = make_order_source(cfg, g, sp.state);
    const CompiledDiagram relaxed =
        compile(g, root, *source, cfg.width, DiagramMode::kRelaxed, relaxed_opts);
    ++result.relaxed_compilations;
    result.candidate_evaluations += relaxed.stats.candidate_evaluations;
    if (sp.prefix_value + relaxed.bound <= incumbent) continue;

    const auto& cutset = relaxed.last_exact_layer.nodes;
    for (std::size_t i = 0; i < cutset.size(); ++i) {
      const Node& u = cutset[i];
      const Weight through =
          relaxed_opts.cutset_bounds ? relaxed.cutset_bounds[i] : relaxed.bound;
      const Weight dual = sp.prefix_value + through;
      if (dual <= incumbent) continue;
      Subproblem child{u.state, sp.prefix_value + u.value, dual, sp.fixed};
      child.fixed |= u.path;
      open.push(std::move(child));
    }
  }

  result.optimum = incumbent;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace ddc
