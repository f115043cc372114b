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

#include "ddcluster/bench.hpp"

#include <bit>
#include <charconv>
#include <filesystem>

#include "ddcluster/errors.hpp"
#include "ddcluster/rng.hpp"

namespace ddc {
namespace {

struct Enumerator {
  std::vector<std::uint64_t> closed;  // N[v] as masks
  std::vector<Weight> weight;
  Weight best = 0;

  Weight Remaining(std::uint64_t avail) const {
    Weight sum = 0;
    while (avail) {
      sum += weight[static_cast<std::size_t>(std::countr_zero(avail))];
      avail &= avail - 1;
    }
    return sum;
  }

  void Run(std::uint64_t avail, Weight current) {
    if (avail == 0) {
      best = std::max(best, current);
      return;
    }
    if (current + Remaining(avail) <= best) return;
    const int v = std::countr_zero(avail);
    Run(avail & ~closed[v], current + weight[v]);
    Run(avail & ~(std::uint64_t{1} << v), current);
  }
};

std::string FormatDouble(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T ParseField(std::string_view tok, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(0, std::string("bad ") + name + " field '" + std::string(tok) + "'");
  return value;
}

std::string PolicyColumn(const StrategyConfig& cfg) {
  return cfg.strategy == Strategy::kBaseline ? "none" : std::string(policy_name(cfg.policy));
}

WeightedGraph ObtainInstance(const SweepSpec& spec, double density, std::uint64_t seed) {
  if (!spec.instance_dir) return generate_instance(spec.n, density, seed);
  namespace fs = std::filesystem;
  const fs::path dir(*spec.instance_dir);
  const fs::path file =
      dir / ("n" + std::to_string(spec.n) + "_d" + FormatDouble(density) + "_s" +
             std::to_string(seed) + ".txt");
  if (fs::exists(file)) return load_graph(file.string());
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  WeightedGraph g = generate_instance(spec.n, density, seed);
  save_graph(g, file.string());
  return g;
}

}  // namespace

Weight brute_force(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  DDC_REQUIRE(n <= kBruteForceLimit, "brute force refuses graphs with more than 30 vertices");
  Enumerator e;
  e.weight = g.weights();
  e.closed.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    g.neighbors(v).for_each([&](Vertex u) { m |= std::uint64_t{1} << u; });
    e.closed[v] = m;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  e.Run(all, 0);
  return e.best;
}

std::string serialize_row(const ExperimentRow& row) {
  std::string s;
  s += FormatDouble(row.density);
  s += ',' + row.instance + ',' + row.strategy + ',' + row.policy + ',';
  s += std::to_string(row.width) + ',';
  if (row.optimum) s += std::to_string(*row.optimum);
  s += ',' + FormatDouble(row.wall_time_s);
  s += ',' + FormatDouble(row.nodes);
  s += ',' + FormatDouble(row.cand_evals);
  s += ',' + FormatDouble(row.relaxed_dds);
  return s;
}

ExperimentRow parse_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = SplitCsv(line);
  if (f.size() != 10) throw ParseError(0, "expected 10 CSV fields, got " + std::to_string(f.size()));
  ExperimentRow row;
  row.density = ParseField<double>(f[0], "density");
  row.instance = std::string(f[1]);
  row.strategy = std::string(f[2]);
  row.policy = std::string(f[3]);
  row.width = ParseField<std::size_t>(f[4], "width");
  if (!f[5].empty()) row.optimum = ParseField<Weight>(f[5], "optimum");
  row.wall_time_s = ParseField<double>(f[6], "wall_time_s");
  row.nodes = ParseField<double>(f[7], "nodes");
  row.cand_evals = ParseField<double>(f[8], "cand_evals");
  row.relaxed_dds = ParseField<double>(f[9], "relaxed_dds");
  return row;
}

std::vector<StrategyConfig> parse_config_list(std::string_view text, std::size_t width,
                                              std::uint64_t seed) {
  std::vector<StrategyConfig> out;
  for (std::string_view item : SplitCsv(text)) {
    if (item.empty()) continue;
    const std::size_t slash = item.find('/');
    const auto strategy = parse_strategy(item.substr(0, slash));
    if (!strategy) throw ContractViolation("unknown strategy '" + std::string(item) + "'");
    StrategyConfig cfg;
    cfg.strategy = *strategy;
    cfg.width = width;
    cfg.seed = seed;
    if (slash != std::string_view::npos) {
      const auto policy = parse_policy(item.substr(slash + 1));
      if (!policy) throw ContractViolation("unknown policy in '" + std::string(item) + "'");
      cfg.policy = *policy;
    }
    out.push_back(cfg);
  }
  DDC_REQUIRE(!out.empty(), "empty configuration list");
  return out;
}

std::string config_label(const StrategyConfig& cfg) {
  if (cfg.strategy == Strategy::kBaseline) return "baseline";
  return std::string(strategy_name(cfg.strategy)) + "/" + std::string(policy_name(cfg.policy));
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t density_index, std::size_t instance) {
  std::uint64_t x = base ^ (static_cast<std::uint64_t>(density_index) << 32) ^ instance;
  return Xoshiro256::SplitMix64(x);
}

std::vector<ExperimentRow> run_sweep(const SweepSpec& spec, std::ostream& out) {
  DDC_REQUIRE(!spec.configs.empty(), "sweep needs at least one configuration");
  std::vector<ExperimentRow> rows;
  out << kCsvHeader << '\n';
  auto emit = [&](ExperimentRow row) {
    out << serialize_row(row) << '\n';
    if (!out) throw IoError("failed writing sweep output");
    rows.push_back(std::move(row));
  };

  for (std::size_t d = 0; d < spec.densities.size(); ++d) {
    const double density = spec.densities[d];
    std::vector<ExperimentRow> sums(spec.configs.size());
    for (std::size_t i = 0; i < spec.instances_per_density; ++i) {
      const WeightedGraph g = ObtainInstance(spec, density, instance_seed(spec.seed, d, i));
      for (std::size_t c = 0; c < spec.configs.size(); ++c) {
        const StrategyConfig& cfg = spec.configs[c];
        const SolveResult r = solve(g, cfg);
        ExperimentRow row{density,
                          std::to_string(i),
                          std::string(strategy_name(cfg.strategy)),
                          PolicyColumn(cfg),
                          cfg.width,
                          r.optimum,
                          r.wall_time.count(),
                          static_cast<double>(r.nodes_processed),
                          static_cast<double>(r.candidate_evaluations),
                          static_cast<double>(r.relaxed_compilations)};
        sums[c].wall_time_s += row.wall_time_s;
        sums[c].nodes += row.nodes;
        sums[c].cand_evals += row.cand_evals;
        sums[c].relaxed_dds += row.relaxed_dds;
        emit(std::move(row));
      }
    }
    const double count = static_cast<double>(std::max<std::size_t>(spec.instances_per_density, 1));
    for (std::size_t c = 0; c < spec.configs.size(); ++c) {
      const StrategyConfig& cfg = spec.configs[c];
      emit(ExperimentRow{density, std::string(kSummaryInstance),
                         std::string(strategy_name(cfg.strategy)), PolicyColumn(cfg), cfg.width,
                         std::nullopt, sums[c].wall_time_s / count, sums[c].nodes / count,
                         sums[c].cand_evals / count, sums[c].relaxed_dds / count});
    }
  }
  return rows;
}

}  // namespace ddc
