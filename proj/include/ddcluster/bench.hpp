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

#ifndef DDCLUSTER_BENCH_HPP_
#define DDCLUSTER_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ddcluster/bnb.hpp"

namespace ddc {

inline constexpr Vertex kBruteForceLimit = 30;

// Exact optimum by enumerating independent sets (with a remaining-weight
// cutoff). Independent of the diagram code. Refuses n > 30.
Weight brute_force(const WeightedGraph& g);

inline constexpr std::string_view kCsvHeader =
    "density,instance,strategy,policy,width,optimum,wall_time_s,nodes,cand_evals,relaxed_dds";
inline constexpr std::string_view kSummaryInstance = "mean";

// One CSV line. Summary rows carry instance "mean", an empty optimum and
// per-density means in the counter columns.
struct ExperimentRow {
  double density = 0.0;
  std::string instance;
  std::string strategy;
  std::string policy;
  std::size_t width = 0;
  std::optional<Weight> optimum;
  double wall_time_s = 0.0;
  double nodes = 0.0;
  double cand_evals = 0.0;
  double relaxed_dds = 0.0;

  bool is_summary() const { return instance == kSummaryInstance; }
  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

std::string serialize_row(const ExperimentRow& row);
// Throws ParseError (line 0) on malformed input.
ExperimentRow parse_row(std::string_view line);

// "baseline,cbc/fixed,pas-vo/adaptive" -> configs; a missing policy means
// fixed. Throws ContractViolation on unknown names.
std::vector<StrategyConfig> parse_config_list(std::string_view text, std::size_t width,
                                              std::uint64_t seed);
std::string config_label(const StrategyConfig& cfg);

struct SweepSpec {
  std::vector<double> densities;
  Vertex n = 100;
  std::size_t instances_per_density = 20;
  std::vector<StrategyConfig> configs;
  std::uint64_t seed = 1;
  // When set, instances are read from / cached to this directory.
  std::optional<std::string> instance_dir;
};

std::uint64_t instance_seed(std::uint64_t base, std::size_t density_index, std::size_t instance);

// Solves every generated instance under every config, writing the header,
// data rows (density, instance, config order) and, after each density, one
// summary row per config. Returns all rows written.
std::vector<ExperimentRow> run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace ddc

#endif  // DDCLUSTER_BENCH_HPP_
