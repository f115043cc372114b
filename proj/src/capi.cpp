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

#include "ddcluster/ddcluster.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "ddcluster/bench.hpp"
#include "ddcluster/errors.hpp"

struct ddc_graph {
  ddc::WeightedGraph graph;
};

struct ddc_result {
  ddc::SolveResult result;
  std::vector<int32_t> best_set;
};

namespace {

thread_local std::string g_last_error;

ddc_status Fail(ddc_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Runs fn, mapping exceptions onto status codes.
template <typename Fn>
ddc_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return DDC_OK;
  } catch (const ddc::ParseError& e) {
    return Fail(DDC_ERR_PARSE, e.what());
  } catch (const ddc::IoError& e) {
    return Fail(DDC_ERR_IO, e.what());
  } catch (const ddc::ContractViolation& e) {
    return Fail(DDC_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DDC_ERR_INTERNAL, e.what());
  }
}

ddc::StrategyConfig ToConfig(const ddc_solver_config& c) {
  ddc::StrategyConfig cfg;
  cfg.strategy = static_cast<ddc::Strategy>(c.strategy);
  cfg.policy = c.policy == DDC_POLICY_ADAPTIVE ? ddc::ClusterPolicyKind::kAdaptive
                                                : ddc::ClusterPolicyKind::kFixed;
  cfg.width = static_cast<std::size_t>(c.width);
  cfg.seed = c.seed;
  return cfg;
}

}  // namespace

extern "C" {

const char* ddc_last_error(void) { return g_last_error.c_str(); }

const char* ddc_version(void) { return "1.0.0"; }

void ddc_solver_config_init(ddc_solver_config* cfg) {
  if (!cfg) return;
  cfg->strategy = DDC_STRATEGY_BASELINE;
  cfg->policy = DDC_POLICY_FIXED;
  cfg->width = 100;
  cfg->seed = 0;
  cfg->whole_diagram_cutset_bound = 0;
}

ddc_status ddc_parse_strategy(const char* name, ddc_strategy* out) {
  if (!name || !out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  const auto s = ddc::parse_strategy(name);
  if (!s) return Fail(DDC_ERR_INVALID_ARGUMENT, std::string("unknown strategy '") + name + "'");
  *out = static_cast<ddc_strategy>(*s);
  return DDC_OK;
}

ddc_status ddc_parse_policy(const char* name, ddc_policy* out) {
  if (!name || !out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  const auto p = ddc::parse_policy(name);
  if (!p) return Fail(DDC_ERR_INVALID_ARGUMENT, std::string("unknown policy '") + name + "'");
  *out = *p == ddc::ClusterPolicyKind::kAdaptive ? DDC_POLICY_ADAPTIVE : DDC_POLICY_FIXED;
  return DDC_OK;
}

const char* ddc_strategy_name(ddc_strategy s) {
  if (s < DDC_STRATEGY_BASELINE || s > DDC_STRATEGY_PAS_VO) return "?";
  return ddc::strategy_name(static_cast<ddc::Strategy>(s)).data();
}

const char* ddc_policy_name(ddc_policy p) {
  return p == DDC_POLICY_ADAPTIVE ? "adaptive" : "fixed";
}

ddc_status ddc_graph_generate(int32_t n, double density, uint64_t seed, ddc_graph** out) {
  if (!out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  if (n < 1) return Fail(DDC_ERR_INVALID_ARGUMENT, "n must be at least 1");
  if (!(density >= 0.0 && density <= 1.0))
    return Fail(DDC_ERR_INVALID_ARGUMENT, "density must lie in [0, 1]");
  return Guard([&] { *out = new ddc_graph{ddc::generate_instance(n, density, seed)}; });
}

ddc_status ddc_graph_parse(const char* text, ddc_graph** out) {
  if (!text || !out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return Guard([&] { *out = new ddc_graph{ddc::parse_graph(std::string(text))}; });
}

ddc_status ddc_graph_load(const char* path, ddc_graph** out) {
  if (!path || !out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return Guard([&] { *out = new ddc_graph{ddc::load_graph(path)}; });
}

ddc_status ddc_graph_save(const ddc_graph* g, const char* path) {
  if (!g || !path) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] { ddc::save_graph(g->graph, path); });
}

ddc_status ddc_graph_serialize(const ddc_graph* g, char* buf, size_t cap, size_t* needed) {
  if (!g || !needed) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    const std::string text = ddc::serialize_graph(g->graph);
    *needed = text.size() + 1;
    if (buf && cap >= text.size() + 1) std::memcpy(buf, text.c_str(), text.size() + 1);
  });
}

int32_t ddc_graph_num_vertices(const ddc_graph* g) { return g ? g->graph.num_vertices() : 0; }

int64_t ddc_graph_num_edges(const ddc_graph* g) {
  return g ? static_cast<int64_t>(g->graph.num_edges()) : 0;
}

int64_t ddc_graph_weight(const ddc_graph* g, int32_t v) {
  if (!g || v < 0 || v >= g->graph.num_vertices()) return 0;
  return g->graph.weight(v);
}

void ddc_graph_free(ddc_graph* g) { delete g; }

ddc_status ddc_solve(const ddc_graph* g, const ddc_solver_config* cfg, ddc_line_fn trace,
                     void* trace_user, ddc_result** out) {
  if (!g || !cfg || !out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (cfg->strategy < DDC_STRATEGY_BASELINE || cfg->strategy > DDC_STRATEGY_PAS_VO)
    return Fail(DDC_ERR_INVALID_ARGUMENT, "unknown strategy");
  if (cfg->width < 2) return Fail(DDC_ERR_INVALID_ARGUMENT, "width must be at least 2");

  ddc::SolveOptions opts;
  opts.cutset_bound = cfg->whole_diagram_cutset_bound ? ddc::CutsetBound::kWholeDiagram
                                                      : ddc::CutsetBound::kPerNode;
  std::uint64_t compile_id = 0;
  if (trace) {
    opts.on_compile = [&](ddc::CompileKind kind, const ddc::Subproblem& sp) {
      const std::string line = "# compile=" + std::to_string(++compile_id) + " kind=" +
                               (kind == ddc::CompileKind::kRelaxed ? "relaxed" : "restricted") +
                               " size=" + std::to_string(sp.state.count());
      trace(line.c_str(), trace_user);
    };
    opts.layer_observer = [&](const ddc::LayerTrace& t) {
      const std::string line = "layer=" + std::to_string(t.index) + " var=" +
                               std::to_string(t.var + 1) + " width_pre=" +
                               std::to_string(t.width_pre) + " width_post=" +
                               std::to_string(t.width_post) +
                               " merged=" + std::to_string(t.merged);
      trace(line.c_str(), trace_user);
    };
  }
  return Guard([&] {
    auto* r = new ddc_result{ddc::solve(g->graph, ToConfig(*cfg), opts), {}};
    for (ddc::Vertex v : r->result.best_set.to_vector()) r->best_set.push_back(v);
    *out = r;
  });
}

int64_t ddc_result_optimum(const ddc_result* r) { return r ? r->result.optimum : 0; }
size_t ddc_result_best_set_size(const ddc_result* r) { return r ? r->best_set.size() : 0; }

size_t ddc_result_best_set(const ddc_result* r, int32_t* out, size_t cap) {
  if (!r || !out) return 0;
  const size_t n = std::min(cap, r->best_set.size());
  std::copy_n(r->best_set.begin(), n, out);
  return n;
}

uint64_t ddc_result_nodes_processed(const ddc_result* r) {
  return r ? r->result.nodes_processed : 0;
}
uint64_t ddc_result_candidate_evaluations(const ddc_result* r) {
  return r ? r->result.candidate_evaluations : 0;
}
uint64_t ddc_result_relaxed_compilations(const ddc_result* r) {
  return r ? r->result.relaxed_compilations : 0;
}
double ddc_result_wall_time_s(const ddc_result* r) {
  return r ? r->result.wall_time.count() : 0.0;
}
void ddc_result_free(ddc_result* r) { delete r; }

ddc_status ddc_brute_force(const ddc_graph* g, int64_t* out) {
  if (!g || !out) return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] { *out = ddc::brute_force(g->graph); });
}

ddc_status ddc_run_sweep(const ddc_sweep_spec* spec, const char* out_path) {
  if (!spec || !out_path || !spec->configs || (spec->num_densities && !spec->densities))
    return Fail(DDC_ERR_INVALID_ARGUMENT, "null argument");
  if (spec->n < 1) return Fail(DDC_ERR_INVALID_ARGUMENT, "n must be at least 1");
  if (spec->width < 2) return Fail(DDC_ERR_INVALID_ARGUMENT, "width must be at least 2");
  for (size_t i = 0; i < spec->num_densities; ++i) {
    if (!(spec->densities[i] >= 0.0 && spec->densities[i] <= 1.0))
      return Fail(DDC_ERR_INVALID_ARGUMENT, "density must lie in [0, 1]");
  }
  return Guard([&] {
    ddc::SweepSpec s;
    s.densities.assign(spec->densities, spec->densities + spec->num_densities);
    s.n = spec->n;
    s.instances_per_density = spec->instances_per_density;
    s.configs = ddc::parse_config_list(spec->configs, static_cast<std::size_t>(spec->width),
                                       spec->seed);
    s.seed = spec->seed;
    if (spec->instance_dir) s.instance_dir = spec->instance_dir;
    if (std::strcmp(out_path, "-") == 0) {
      ddc::run_sweep(s, std::cout);
      std::cout.flush();
      return;
    }
    std::ofstream out(out_path);
    if (!out) throw ddc::IoError(std::string("cannot write ") + out_path);
    ddc::run_sweep(s, out);
    out.close();
    if (!out) throw ddc::IoError(std::string("write failed: ") + out_path);
  });
}

}  // extern "C"
