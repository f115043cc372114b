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

#include "ddcluster/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ddcluster/errors.hpp"
#include "ddcluster/rng.hpp"

namespace ddc {

WeightedGraph::WeightedGraph(std::vector<Weight> weights,
                             const std::vector<std::pair<Vertex, Vertex>>& edges)
    : weights_(std::move(weights)) {
  const Vertex n = num_vertices();
  for (Weight w : weights_) DDC_REQUIRE(w >= 1, "vertex weight must be positive");
  adj_.assign(weights_.size(), VertexSet(n));
  for (auto [u, v] : edges) {
    DDC_REQUIRE(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    DDC_REQUIRE(u != v, "self-loop");
    if (adj_[u].test(v)) continue;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++num_edges_;
  }
}

std::vector<std::pair<Vertex, Vertex>> WeightedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

WeightedGraph generate_instance(Vertex n, double density, std::uint64_t seed) {
  DDC_REQUIRE(n >= 1, "n must be at least 1");
  DDC_REQUIRE(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  Xoshiro256 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() < density) edges.emplace_back(i, j);
    }
  }
  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) weights[i] = (i % 100) + 1;
  return WeightedGraph(std::move(weights), edges);
}

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t ParseInt(std::string_view tok, int line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::vector<Weight> weights;
  std::vector<bool> seen;
  std::vector<std::pair<Vertex, Vertex>> edges;

  auto vertex_index = [&](std::string_view tok) {
    const std::int64_t idx = ParseInt(tok, line_no);
    if (idx < 1 || idx > n) throw ParseError(line_no, "vertex index out of range");
    return static_cast<Vertex>(idx - 1);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = Tokens(line);
    if (toks.empty() || toks[0] == "c") continue;
    const std::string_view kind = toks[0];
    if (kind == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::size_t first = 1;
      if (toks.size() == 4) first = 2;  // "p edge n m"
      else if (toks.size() != 3) throw ParseError(line_no, "malformed header");
      n = ParseInt(toks[first], line_no);
      const std::int64_t m = ParseInt(toks[first + 1], line_no);
      if (n < 0 || m < 0 || n > (std::int64_t{1} << 24))
        throw ParseError(line_no, "malformed header");
      have_header = true;
      weights.assign(static_cast<std::size_t>(n), 0);
      seen.assign(static_cast<std::size_t>(n), false);
      edges.reserve(static_cast<std::size_t>(m));
    } else if (kind == "v" || kind == "e") {
      if (!have_header) throw ParseError(line_no, "data line before header");
      if (toks.size() != 3) throw ParseError(line_no, "expected two fields");
      if (kind == "v") {
        const Vertex v = vertex_index(toks[1]);
        const std::int64_t w = ParseInt(toks[2], line_no);
        if (w < 1) throw ParseError(line_no, "non-positive weight");
        if (seen[v]) throw ParseError(line_no, "duplicate weight line");
        seen[v] = true;
        weights[v] = w;
      } else {
        const Vertex u = vertex_index(toks[1]);
        const Vertex v = vertex_index(toks[2]);
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.emplace_back(u, v);
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i])
      throw ParseError(line_no, "missing weight for vertex " + std::to_string(i + 1));
  }
  return WeightedGraph(std::move(weights), edges);
}

WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

void save_graph(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << serialize_graph(g);
  if (!out) throw IoError("write failed: " + path);
}

std::size_t induced_degree(const WeightedGraph& g, const VertexSet& s, Vertex v) {
  DDC_REQUIRE(v >= 0 && v < g.num_vertices() && s.test(v), "vertex not in state");
  return g.neighbors(v).intersection_count(s);
}

}  // namespace ddc
