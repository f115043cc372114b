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

#include "doctest.h"
#include "ddcluster/bench.hpp"
#include "ddcluster/bnb.hpp"
#include "ddcluster/errors.hpp"
#include "test_support.hpp"

using namespace ddc;
using namespace ddc::testing;

namespace {

std::vector<StrategyConfig> AllConfigs(std::size_t width, std::uint64_t seed = 0) {
  std::vector<StrategyConfig> out{{Strategy::kBaseline, ClusterPolicyKind::kFixed, width, seed}};
  for (Strategy s : {Strategy::kCbc, Strategy::kPasVo, Strategy::kPas})
    for (auto p : {ClusterPolicyKind::kFixed, ClusterPolicyKind::kAdaptive}) out.push_back({s, p, width, seed});
  return out;
}

void CheckSolution(const WeightedGraph& g, const SolveResult& r) {
  CHECK(is_independent(g, r.best_set));
  CHECK(total_weight(g, r.best_set) == r.optimum);
}

}  // namespace

TEST_CASE("solve: path on three vertices closes at the root") {
  const auto p3 = path3(2, 5, 2);
  for (const auto& cfg : AllConfigs(100)) {
    const auto r = solve(p3, cfg);
    CHECK(r.optimum == 5);
    CHECK(r.nodes_processed == 1);
    CHECK(r.relaxed_compilations == 0);
    CHECK(r.best_set == set_of(3, {1}));
  }
}

TEST_CASE("solve: empty graph and trivial instances") {
  const WeightedGraph empty({}, {});
  const auto r = solve(empty, {});
  CHECK(r.optimum == 0);
  CHECK(r.best_set.empty());
  CHECK(solve(make_graph({1, 2, 3}), {}).best_set == set_of(3, {0, 1, 2}));
  CHECK(solve(complete({3, 7, 5}), {}).best_set == set_of(3, {1}));
  CHECK_THROWS_AS(solve(path3(1, 1, 1), StrategyConfig{Strategy::kCbc, ClusterPolicyKind::kFixed, 1, 0}),
                  ContractViolation);
}

TEST_CASE("solve: subproblems within the threshold need one node") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = static_cast<Vertex>(1 + rng() % 14);
    const auto g = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 8));
    const auto r = solve(g, {Strategy::kCbc, ClusterPolicyKind::kAdaptive, 128, 0});
    CHECK(r.nodes_processed == 1);
    CHECK(r.relaxed_compilations == 0);
    CHECK(r.optimum == subset_oracle(g));
  }
}

TEST_CASE("solve: 30 vertices at width 4 match the oracle under every configuration") {
  const auto g = generate_instance(30, 0.5, 2024);
  const Weight expected = brute_force(g);
  for (const auto& cfg : AllConfigs(4, 9)) {
    const auto r = solve(g, cfg);
    CHECK(r.optimum == expected);
    CHECK(r.nodes_processed > 1);
    CheckSolution(g, r);
  }
}

TEST_CASE("solve: sound on random instances for every configuration and cutset bound") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = static_cast<Vertex>(4 + rng() % 17);
    const auto g = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 8));
    const Weight opt = subset_oracle(g);
    const std::size_t width = 2 + rng() % 5;
    for (const auto& cfg : AllConfigs(width, rng())) {
      for (auto cb : {CutsetBound::kPerNode, CutsetBound::kWholeDiagram}) {
        SolveOptions opts;
        opts.cutset_bound = cb;
        const auto r = solve(g, cfg, opts);
        CHECK(r.optimum == opt);
        CheckSolution(g, r);
      }
    }
  }
}

TEST_CASE("solve: incumbent and queue bound bracket the optimum at every step") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const Vertex n = static_cast<Vertex>(10 + rng() % 11);
    const auto g = random_graph(rng, n, 0.3);
    const Weight opt = subset_oracle(g);
    for (const auto& cfg : AllConfigs(3, 5)) {
      Weight last_incumbent = 0;
      bool ok = true;
      SolveOptions opts;
      opts.on_iteration = [&](const SearchSnapshot& s) {
        ok = ok && s.incumbent <= opt && s.incumbent >= last_incumbent;
        ok = ok && (s.max_queued_dual >= opt || s.incumbent == opt);
        last_incumbent = s.incumbent;
      };
      CHECK(solve(g, cfg, opts).optimum == opt);
      CHECK(ok);
    }
  }
}

TEST_CASE("solve: no relaxed compilation for subproblems at or below the threshold") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(rng, 22, 0.3);
    for (const auto& cfg : AllConfigs(4, 1)) {
      std::uint64_t relaxed_small = 0;
      SolveOptions opts;
      opts.on_compile = [&](CompileKind kind, const Subproblem& sp) {
        if (kind == CompileKind::kRelaxed && sp.state.count() <= exactness_threshold(cfg.width))
          ++relaxed_small;
      };
      solve(g, cfg, opts);
      CHECK(relaxed_small == 0);
    }
  }
}

TEST_CASE("solve: strategy changes effort but not the answer") {
  const auto g = generate_instance(28, 0.6, 77);
  Weight first = -1;
  for (const auto& cfg : AllConfigs(8, 3)) {
    const auto r = solve(g, cfg);
    if (first < 0) first = r.optimum;
    CHECK(r.optimum == first);
    CHECK(total_weight(g, r.best_set) == first);
    CHECK(r.wall_time.count() >= 0.0);
  }
  CHECK(first == brute_force(g));
}

TEST_CASE("solve: deterministic counters") {
  const auto g = generate_instance(40, 0.5, 3);
  for (const auto& cfg : AllConfigs(8, 11)) {
    const auto a = solve(g, cfg);
    const auto b = solve(g, cfg);
    CHECK(a.nodes_processed == b.nodes_processed);
    CHECK(a.candidate_evaluations == b.candidate_evaluations);
    CHECK(a.relaxed_compilations == b.relaxed_compilations);
    CHECK(a.best_set == b.best_set);
  }
}
