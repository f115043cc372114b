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

#include <cmath>
#include <string>

#include "doctest.h"
#include "ddcluster/errors.hpp"
#include "ddcluster/graph.hpp"
#include "test_support.hpp"

using namespace ddc;
using namespace ddc::testing;

namespace {

void CheckStructure(const WeightedGraph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    CHECK(g.weight(u) >= 1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

std::string ErrorOf(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("generate_instance: edgeless at density zero with index-based weights") {
  const auto g = generate_instance(3, 0.0, 42);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 0);
  CHECK(g.weights() == std::vector<Weight>{1, 2, 3});
}

TEST_CASE("generate_instance: weight wraps every 100 vertices") {
  const auto g = generate_instance(101, 0.3, 5);
  CHECK(g.weight(99) == 100);
  CHECK(g.weight(100) == 1);
}

TEST_CASE("generate_instance: edge count within the 99% binomial band") {
  // 100 vertices have 4950 pairs; Binomial(4950, 0.5) has mean 2475 and
  // standard deviation sqrt(4950 / 4).
  const double pairs = 100.0 * 99.0 / 2.0;
  const double mean = pairs * 0.5;
  const double sd = std::sqrt(pairs * 0.25);
  const double z99 = 2.5758;
  const auto g = generate_instance(100, 0.5, 7);
  CHECK(static_cast<double>(g.num_edges()) >= mean - z99 * sd);
  CHECK(static_cast<double>(g.num_edges()) <= mean + z99 * sd);
}

TEST_CASE("generate_instance: density one is complete, degenerate n=1 is edgeless") {
  CHECK(generate_instance(12, 1.0, 3).num_edges() == 66);
  CHECK(generate_instance(1, 1.0, 3).num_edges() == 0);
}

TEST_CASE("generate_instance: deterministic per seed and structurally valid") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const auto a = generate_instance(40, 0.4, seed);
    const auto b = generate_instance(40, 0.4, seed);
    CHECK(a == b);
    CheckStructure(a);
  }
  CHECK_FALSE(generate_instance(40, 0.4, 1) == generate_instance(40, 0.4, 2));
}

TEST_CASE("generate_instance: rejects bad arguments") {
  CHECK_THROWS_AS(generate_instance(0, 0.5, 1), ContractViolation);
  CHECK_THROWS_AS(generate_instance(5, 1.5, 1), ContractViolation);
}

TEST_CASE("parse_graph: path on three vertices") {
  const auto g = parse_graph("c a comment\np 3 2\nv 1 2\nv 2 5\nv 3 2\ne 1 2\ne 2 3\n");
  CHECK(g == path3(2, 5, 2));
  CheckStructure(g);
}

TEST_CASE("parse_graph: accepts DIMACS-style header") {
  const auto g = parse_graph("p edge 2 1\nv 1 4\nv 2 4\ne 2 1\n");
  CHECK(g.adjacent(0, 1));
}

TEST_CASE("parse_graph: duplicate edge lines are idempotent") {
  const auto once = parse_graph("p 2 1\nv 1 1\nv 2 1\ne 1 2\n");
  const auto twice = parse_graph("p 2 2\nv 1 1\nv 2 1\ne 1 2\ne 1 2\n");
  CHECK(once == twice);
  CHECK(twice.num_edges() == 1);
}

TEST_CASE("parse_graph: errors name the offending line") {
  CHECK(ErrorOf("p 3 1\nv 1 1\nv 2 1\nv 3 1\ne 1 4\n") == "line 5: vertex index out of range");
  CHECK(ErrorOf("p 3\n") == "line 1: malformed header");
  CHECK(ErrorOf("p 2 0\nv 1 0\nv 2 1\n") == "line 2: non-positive weight");
  CHECK(ErrorOf("p 2 0\nv 1 -3\nv 2 1\n") == "line 2: non-positive weight");
  CHECK(ErrorOf("v 1 1\n") == "line 1: data line before header");
  CHECK(ErrorOf("p 2 1\nv 1 1\nv 2 1\ne 2 2\n") == "line 4: self-loop");
  CHECK(ErrorOf("p 2 0\nv 1 1\n") == "line 2: missing weight for vertex 2");
  CHECK(ErrorOf("p 2 0\nv 1 x\n") == "line 2: expected integer, got 'x'");
  CHECK(ErrorOf("") == "line 0: missing header");
}

TEST_CASE("load_graph: missing file and parse errors carry the path") {
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("serialize_graph: parse(serialize(g)) == g on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex n = static_cast<Vertex>(1 + rng() % 70);
    const auto g = random_graph(rng, n, static_cast<double>(rng() % 100) / 100.0, 1000);
    const auto back = parse_graph(serialize_graph(g));
    CHECK(back == g);
    CheckStructure(back);
  }
}

TEST_CASE("induced_degree") {
  const auto p3 = path3(1, 1, 1);
  CHECK(induced_degree(p3, p3.all_vertices(), 1) == 2);
  CHECK(induced_degree(p3, set_of(3, {0, 1}), 1) == 1);
  const auto k4 = complete({1, 1, 1, 1});
  CHECK(induced_degree(k4, set_of(4, {0, 2, 3}), 2) == 2);
  CHECK_THROWS_AS(induced_degree(p3, set_of(3, {0, 2}), 1), ContractViolation);
}

TEST_CASE("VertexSet: lexicographic order reads vertex 0 first") {
  // {1} lacks vertex 0 while {0} has it, so {1} < {0}.
  CHECK(lex_less(set_of(4, {1}), set_of(4, {0})));
  CHECK_FALSE(lex_less(set_of(4, {0}), set_of(4, {1})));
  CHECK(lex_less(set_of(4, {}), set_of(4, {3})));
  CHECK(lex_less(set_of(130, {0, 100}), set_of(130, {0, 70})));
  CHECK_FALSE(lex_less(set_of(4, {2}), set_of(4, {2})));
}
