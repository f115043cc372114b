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

// ddcluster command line front end. Talks to the solver only through the C
// interface in ddcluster/ddcluster.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddcluster/ddcluster.h"

namespace {

constexpr int kExitError = 2;

struct GraphDeleter {
  void operator()(ddc_graph* g) const { ddc_graph_free(g); }
};
struct ResultDeleter {
  void operator()(ddc_result* r) const { ddc_result_free(r); }
};
using GraphPtr = std::unique_ptr<ddc_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<ddc_result, ResultDeleter>;

int Report() {
  std::fprintf(stderr, "error: %s\n", ddc_last_error());
  return kExitError;
}

GraphPtr LoadOrNull(const std::string& path, int* rc) {
  ddc_graph* g = nullptr;
  if (ddc_graph_load(path.c_str(), &g) != DDC_OK) *rc = Report();
  return GraphPtr(g);
}

void PrintLine(const char* line, void*) { std::printf("%s\n", line); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision-diagram branch-and-bound for maximum weighted independent set"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a random G(n, p) instance");
  int gen_n = 100;
  double gen_density = 0.5;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", gen_density, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output file")->required();

  // solve
  auto* sol = app.add_subcommand("solve", "Solve an instance to optimality");
  std::string sol_instance, sol_strategy = "baseline", sol_policy = "fixed";
  int sol_width = 100;
  std::uint64_t sol_seed = 0;
  bool sol_trace = false, sol_whole = false;
  sol->add_option("--instance", sol_instance, "Instance file")->required();
  sol->add_option("--strategy", sol_strategy, "baseline|cbc|pas|pas-vo");
  sol->add_option("--policy", sol_policy, "fixed|adaptive");
  sol->add_option("--width", sol_width, "Maximum diagram width W")->check(CLI::Range(2, 1 << 24));
  sol->add_option("--seed", sol_seed, "Clustering seed");
  sol->add_flag("--trace", sol_trace, "Print per-layer compilation trace");
  sol->add_flag("--whole-diagram-bound", sol_whole,
                "Bound cutset nodes by the whole relaxed diagram");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Run an experiment sweep and write CSV");
  std::vector<double> swp_densities{0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2};
  int swp_n = 100, swp_width = 100;
  std::size_t swp_count = 20;
  std::string swp_configs =
      "baseline,cbc/fixed,cbc/adaptive,pas-vo/fixed,pas-vo/adaptive,pas/fixed,pas/adaptive";
  std::string swp_out, swp_dir;
  std::uint64_t swp_seed = 1;
  swp->add_option("--densities", swp_densities, "Comma-separated densities")->delimiter(',');
  swp->add_option("--n", swp_n, "Vertices per instance")->check(CLI::PositiveNumber);
  swp->add_option("--count", swp_count, "Instances per density");
  swp->add_option("--configs", swp_configs, "Comma-separated strategy[/policy] list");
  swp->add_option("--width", swp_width, "Maximum diagram width W")->check(CLI::Range(2, 1 << 24));
  swp->add_option("--seed", swp_seed, "Base seed for instances and clustering");
  swp->add_option("--instance-dir", swp_dir, "Cache generated instances in this directory");
  swp->add_option("--out", swp_out, "CSV output file ('-' for stdout)")->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force optimum (at most 30 vertices)");
  std::string orc_instance;
  orc->add_option("--instance", orc_instance, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  int rc = 0;
  if (*gen) {
    ddc_graph* raw = nullptr;
    ddc_status st = ddc_graph_generate(gen_n, gen_density, gen_seed, &raw);
    GraphPtr g(raw);
    if (st == DDC_OK) st = ddc_graph_save(g.get(), gen_out.c_str());
    if (st != DDC_OK) return Report();
    std::printf("wrote %s: n=%d m=%lld\n", gen_out.c_str(), ddc_graph_num_vertices(g.get()),
                static_cast<long long>(ddc_graph_num_edges(g.get())));
    return 0;
  }

  if (*sol) {
    GraphPtr g = LoadOrNull(sol_instance, &rc);
    if (!g) return rc;
    ddc_solver_config cfg;
    ddc_solver_config_init(&cfg);
    if (ddc_parse_strategy(sol_strategy.c_str(), &cfg.strategy) != DDC_OK ||
        ddc_parse_policy(sol_policy.c_str(), &cfg.policy) != DDC_OK) {
      return Report();
    }
    cfg.width = sol_width;
    cfg.seed = sol_seed;
    cfg.whole_diagram_cutset_bound = sol_whole ? 1 : 0;
    ddc_result* raw = nullptr;
    const ddc_status st = ddc_solve(g.get(), &cfg, sol_trace ? PrintLine : nullptr, nullptr, &raw);
    ResultPtr r(raw);
    if (st != DDC_OK) return Report();
    std::vector<int32_t> best(ddc_result_best_set_size(r.get()));
    ddc_result_best_set(r.get(), best.data(), best.size());
    std::printf("optimum=%lld\n", static_cast<long long>(ddc_result_optimum(r.get())));
    std::printf("best_set=");
    for (std::size_t i = 0; i < best.size(); ++i) std::printf(i ? " %d" : "%d", best[i] + 1);
    std::printf("\n");
    std::printf("nodes=%llu\n", static_cast<unsigned long long>(ddc_result_nodes_processed(r.get())));
    std::printf("cand_evals=%llu\n",
                static_cast<unsigned long long>(ddc_result_candidate_evaluations(r.get())));
    std::printf("relaxed_dds=%llu\n",
                static_cast<unsigned long long>(ddc_result_relaxed_compilations(r.get())));
    std::printf("wall_time_s=%.6f\n", ddc_result_wall_time_s(r.get()));
    return 0;
  }

  if (*swp) {
    ddc_sweep_spec spec{};
    spec.densities = swp_densities.data();
    spec.num_densities = swp_densities.size();
    spec.n = swp_n;
    spec.instances_per_density = swp_count;
    spec.configs = swp_configs.c_str();
    spec.width = swp_width;
    spec.seed = swp_seed;
    spec.instance_dir = swp_dir.empty() ? nullptr : swp_dir.c_str();
    const ddc_status st = ddc_run_sweep(&spec, swp_out.c_str());
    if (st != DDC_OK) return Report();
    return 0;
  }

  if (*orc) {
    GraphPtr g = LoadOrNull(orc_instance, &rc);
    if (!g) return rc;
    int64_t best = 0;
    const ddc_status st = ddc_brute_force(g.get(), &best);
    if (st != DDC_OK) return Report();
    std::printf("optimum=%lld\n", static_cast<long long>(best));
    return 0;
  }
  return 0;
}
