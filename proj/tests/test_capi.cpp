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

// Exercises the shared library through its C header only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "ddcluster/ddcluster.h"

namespace {

constexpr const char* kP3 = "p 3 2\nv 1 2\nv 2 5\nv 3 2\ne 1 2\ne 2 3\n";

ddc_graph* Parse(const char* text) {
  ddc_graph* g = nullptr;
  REQUIRE(ddc_graph_parse(text, &g) == DDC_OK);
  return g;
}

void Collect(const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); }

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / (name + "_" + std::to_string(::getpid()));
}

}  // namespace

TEST_CASE("version and names") {
  CHECK(std::string(ddc_version()) == "1.0.0");
  ddc_strategy s;
  CHECK(ddc_parse_strategy("pas-vo", &s) == DDC_OK);
  CHECK(s == DDC_STRATEGY_PAS_VO);
  CHECK(std::string(ddc_strategy_name(DDC_STRATEGY_CBC)) == "cbc");
  CHECK(ddc_parse_strategy("bogus", &s) == DDC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ddc_last_error()).find("bogus") != std::string::npos);
  ddc_policy p;
  CHECK(ddc_parse_policy("adaptive", &p) == DDC_OK);
  CHECK(p == DDC_POLICY_ADAPTIVE);
  CHECK(std::string(ddc_policy_name(DDC_POLICY_FIXED)) == "fixed");
  CHECK(ddc_parse_policy(nullptr, &p) == DDC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph handles") {
  ddc_graph* g = Parse(kP3);
  CHECK(ddc_graph_num_vertices(g) == 3);
  CHECK(ddc_graph_num_edges(g) == 2);
  CHECK(ddc_graph_weight(g, 1) == 5);

  size_t needed = 0;
  CHECK(ddc_graph_serialize(g, nullptr, 0, &needed) == DDC_OK);
  std::vector<char> buf(needed);
  CHECK(ddc_graph_serialize(g, buf.data(), buf.size(), &needed) == DDC_OK);
  ddc_graph* back = Parse(buf.data());
  CHECK(ddc_graph_num_edges(back) == 2);
  ddc_graph_free(back);

  char tiny[4];
  CHECK(ddc_graph_serialize(g, tiny, sizeof(tiny), &needed) == DDC_OK);
  CHECK(needed == buf.size());
  ddc_graph_free(g);
  ddc_graph_free(nullptr);
}

TEST_CASE("error codes") {
  ddc_graph* g = nullptr;
  CHECK(ddc_graph_parse("p 3 1\nv 1 1\nv 2 1\nv 3 1\ne 1 4\n", &g) == DDC_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(ddc_last_error()) == "line 5: vertex index out of range");
  CHECK(ddc_graph_load("/nonexistent/x.txt", &g) == DDC_ERR_IO);
  CHECK(ddc_graph_generate(0, 0.5, 1, &g) == DDC_ERR_INVALID_ARGUMENT);
  CHECK(ddc_graph_parse(nullptr, &g) == DDC_ERR_INVALID_ARGUMENT);

  const auto bad = TempPath("ddcluster_bad.txt");
  std::ofstream(bad) << "p 2 0\nv 1 0\n";
  CHECK(ddc_graph_load(bad.c_str(), &g) == DDC_ERR_PARSE);
  CHECK(std::string(ddc_last_error()) == bad.string() + ": line 2: non-positive weight");
  std::filesystem::remove(bad);

  ddc_graph* big = nullptr;
  REQUIRE(ddc_graph_generate(31, 0.5, 1, &big) == DDC_OK);
  int64_t best = 0;
  CHECK(ddc_brute_force(big, &best) == DDC_ERR_CONTRACT);
  ddc_solver_config cfg;
  ddc_solver_config_init(&cfg);
  cfg.width = 1;
  ddc_result* r = nullptr;
  CHECK(ddc_solve(big, &cfg, nullptr, nullptr, &r) == DDC_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  ddc_graph_free(big);
}

TEST_CASE("solve through the C interface") {
  ddc_graph* g = Parse(kP3);
  ddc_solver_config cfg;
  ddc_solver_config_init(&cfg);
  CHECK(cfg.width == 100);
  cfg.strategy = DDC_STRATEGY_CBC;
  std::vector<std::string> trace;
  ddc_result* r = nullptr;
  REQUIRE(ddc_solve(g, &cfg, Collect, &trace, &r) == DDC_OK);
  CHECK(ddc_result_optimum(r) == 5);
  CHECK(ddc_result_nodes_processed(r) == 1);
  CHECK(ddc_result_relaxed_compilations(r) == 0);
  REQUIRE(ddc_result_best_set_size(r) == 1);
  int32_t v = -1;
  CHECK(ddc_result_best_set(r, &v, 1) == 1);
  CHECK(v == 1);
  CHECK(ddc_result_wall_time_s(r) >= 0.0);
  ddc_result_free(r);

  // Restricted order is by weight: vertex 2 (1-based) first.
  REQUIRE(trace.size() == 4);
  CHECK(trace[0] == "# compile=1 kind=restricted size=3");
  CHECK(trace[1] == "layer=1 var=2 width_pre=2 width_post=2 merged=0");
  CHECK(trace[2].rfind("layer=2 var=1 ", 0) == 0);
  ddc_graph_free(g);

  int64_t best = 0;
  ddc_graph* h = nullptr;
  REQUIRE(ddc_graph_generate(25, 0.4, 9, &h) == DDC_OK);
  REQUIRE(ddc_brute_force(h, &best) == DDC_OK);
  cfg.width = 4;
  cfg.policy = DDC_POLICY_ADAPTIVE;
  for (int whole = 0; whole < 2; ++whole) {
    cfg.whole_diagram_cutset_bound = whole;
    REQUIRE(ddc_solve(h, &cfg, nullptr, nullptr, &r) == DDC_OK);
    CHECK(ddc_result_optimum(r) == best);
    CHECK(ddc_result_relaxed_compilations(r) > 0);
    ddc_result_free(r);
  }
  ddc_graph_free(h);
}

TEST_CASE("save, load and sweep to a file") {
  ddc_graph* g = nullptr;
  REQUIRE(ddc_graph_generate(15, 0.5, 4, &g) == DDC_OK);
  const auto path = TempPath("ddcluster_g.txt");
  REQUIRE(ddc_graph_save(g, path.c_str()) == DDC_OK);
  ddc_graph* back = nullptr;
  REQUIRE(ddc_graph_load(path.c_str(), &back) == DDC_OK);
  CHECK(ddc_graph_num_edges(back) == ddc_graph_num_edges(g));
  ddc_graph_free(back);
  ddc_graph_free(g);
  std::filesystem::remove(path);

  const double densities[] = {0.9};
  ddc_sweep_spec spec{densities, 1, 20, 3, "baseline,cbc/adaptive", 100, 1, nullptr};
  const auto csv = TempPath("ddcluster_sweep.csv");
  REQUIRE(ddc_run_sweep(&spec, csv.c_str()) == DDC_OK);
  std::ifstream in(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  CHECK(lines.size() == 9);
  CHECK(lines[0] == "density,instance,strategy,policy,width,optimum,wall_time_s,nodes,cand_evals,relaxed_dds");
  std::filesystem::remove(csv);

  spec.configs = "cbc/never";
  CHECK(ddc_run_sweep(&spec, csv.c_str()) == DDC_ERR_CONTRACT);
  spec.configs = "baseline";
  CHECK(ddc_run_sweep(&spec, "/nonexistent/dir/out.csv") == DDC_ERR_IO);
  CHECK(std::string(ddc_last_error()).find("/nonexistent/dir/out.csv") != std::string::npos);
}
