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

#include "ddcluster/dd.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "ddcluster/errors.hpp"

namespace ddc {
namespace {

void MergeTags(std::vector<CutTag>& into, const std::vector<CutTag>& from) {
  if (from.empty()) return;
  if (into.empty()) {
    into = from;
    return;
  }
  std::vector<CutTag> out;
  out.reserve(into.size() + from.size());
  std::size_t i = 0, j = 0;
  while (i < into.size() || j < from.size()) {
    if (j == from.size() || (i < into.size() && into[i].id < from[j].id)) {
      out.push_back(into[i++]);
    } else if (i == into.size() || from[j].id < into[i].id) {
      out.push_back(from[j++]);
    } else {
      out.push_back({into[i].id, std::max(into[i].value, from[j].value)});
      ++i;
      ++j;
    }
  }
  into = std::move(out);
}

// Open-addressing index from state to position in a node vector, so that
// children are deduplicated without copying states into a map.
class StateIndex {
 public:
  explicit StateIndex(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, kEmpty);
  }

  // Returns the slot holding `state` or the empty slot where it belongs.
  std::size_t Find(const std::vector<Node>& nodes, const VertexSet& state) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = state.hash() & mask;
    while (slots_[i] != kEmpty && !(nodes[slots_[i]].state == state)) i = (i + 1) & mask;
    return i;
  }
  std::uint32_t At(std::size_t slot) const { return slots_[slot]; }
  void Set(std::size_t slot, std::uint32_t idx) { slots_[slot] = idx; }

  static constexpr std::uint32_t kEmpty = UINT32_MAX;

 private:
  std::vector<std::uint32_t> slots_;
};

void AddChild(std::vector<Node>& nodes, StateIndex& index, VertexSet state, Weight value,
              const Node& parent, Vertex taken, Weight reward_value) {
  const std::size_t slot = index.Find(nodes, state);
  const std::uint32_t at = index.At(slot);
  if (at == StateIndex::kEmpty) {
    Node child;
    child.state = std::move(state);
    child.value = value;
    if (parent.path.universe() > 0) {
      child.path = parent.path;
      if (taken != kNoVertex) child.path.insert(taken);
    }
    child.tags = parent.tags;
    for (auto& t : child.tags) t.value += reward_value;
    index.Set(slot, static_cast<std::uint32_t>(nodes.size()));
    nodes.push_back(std::move(child));
    return;
  }
  Node& existing = nodes[at];
  if (value > existing.value) {
    existing.value = value;
    if (parent.path.universe() > 0) {
      existing.path = parent.path;
      if (taken != kNoVertex) existing.path.insert(taken);
    }
  }
  if (!parent.tags.empty()) {
    std::vector<CutTag> shifted = parent.tags;
    for (auto& t : shifted) t.value += reward_value;
    MergeTags(existing.tags, shifted);
  }
}

Layer Expand(const WeightedGraph& g, const Layer& prev, Vertex v) {
  Layer next;
  next.index = prev.index + 1;
  next.nodes.reserve(prev.nodes.size() * 2);
  StateIndex index(prev.nodes.size() * 2);
  const Weight w = g.weight(v);
  for (const Node& u : prev.nodes) {
    VertexSet skip = u.state;
    skip.erase(v);
    AddChild(next.nodes, index, std::move(skip), u.value, u, kNoVertex, 0);
    if (u.state.test(v)) {
      AddChild(next.nodes, index, transition(g, u.state, v, true), u.value + w, u, v, w);
    }
  }
  return next;
}

void SortByPriority(std::vector<Node>& nodes) {
  std::sort(nodes.begin(), nodes.end(), node_priority_less);
}

}  // namespace

VertexSet transition(const WeightedGraph& g, const VertexSet& s, Vertex v, bool take) {
  VertexSet out = s;
  if (!take) {
    out.erase(v);
    return out;
  }
  DDC_REQUIRE(s.test(v), "decision 1 on a vertex outside the state");
  out.erase(v);
  out.subtract(g.neighbors(v));
  return out;
}

Weight reward(const WeightedGraph& g, Vertex v, bool take) { return take ? g.weight(v) : 0; }

bool node_priority_less(const Node& a, const Node& b) {
  if (a.value != b.value) return a.value > b.value;
  return lex_less(a.state, b.state);
}

Layer relax_layer(Layer layer, std::size_t width, DiagramStats* stats) {
  DDC_REQUIRE(width >= 2, "relaxed width must be at least 2");
  if (layer.nodes.size() <= width) return layer;
  SortByPriority(layer.nodes);
  Node merged = std::move(layer.nodes[width - 1]);
  merged.path = VertexSet();
  const std::size_t folded = layer.nodes.size() - (width - 1);
  for (std::size_t i = width; i < layer.nodes.size(); ++i) {
    Node& other = layer.nodes[i];
    merged.state |= other.state;
    merged.value = std::max(merged.value, other.value);
    MergeTags(merged.tags, other.tags);
  }
  layer.nodes.resize(width - 1);
  auto same = std::find_if(layer.nodes.begin(), layer.nodes.end(),
                           [&](const Node& n) { return n.state == merged.state; });
  if (same != layer.nodes.end()) {
    same->value = std::max(same->value, merged.value);
    MergeTags(same->tags, merged.tags);
  } else {
    layer.nodes.push_back(std::move(merged));
  }
  if (stats) stats->merges += folded;
  return layer;
}

Layer restrict_layer(Layer layer, std::size_t width, DiagramStats* stats) {
  DDC_REQUIRE(width >= 1, "restricted width must be at least 1");
  if (layer.nodes.size() <= width) return layer;
  SortByPriority(layer.nodes);
  if (stats) stats->removals += layer.nodes.size() - width;
  layer.nodes.resize(width);
  return layer;
}

Layer build_layer(const WeightedGraph& g, const Layer& prev, Vertex v, std::size_t width,
                  DiagramMode mode, DiagramStats& stats) {
  DDC_REQUIRE(!prev.nodes.empty(), "empty layer");
  Layer next = Expand(g, prev, v);
  if (mode == DiagramMode::kRelaxed && next.nodes.size() > width) {
    next = relax_layer(std::move(next), width, &stats);
  } else if (mode == DiagramMode::kRestricted && next.nodes.size() > width) {
    next = restrict_layer(std::move(next), width, &stats);
  }
  ++stats.layers_built;
  stats.max_width = std::max(stats.max_width, next.nodes.size());
  return next;
}

CompiledDiagram compile(const WeightedGraph& g, const Node& root, VariableOrderSource& source,
                        std::size_t width, DiagramMode mode, const CompileOptions& options) {
  DDC_REQUIRE(root.state.universe() == g.num_vertices(), "root state over wrong universe");
  DDC_REQUIRE(mode == DiagramMode::kExact || width >= (mode == DiagramMode::kRelaxed ? 2u : 1u),
              "width too small");
  CompiledDiagram out;
  DiagramStats& stats = out.stats;

  Layer layer;
  layer.index = 0;
  Node start;
  start.state = root.state;
  start.value = root.value;
  if (options.track_paths) start.path = VertexSet(g.num_vertices());
  layer.nodes.push_back(std::move(start));
  stats.max_width = 1;

  VertexSet remaining = root.state;
  std::size_t steps = remaining.count();
  bool violated = false;
  const bool bounded = mode != DiagramMode::kExact;

  for (std::size_t k = 0; k < steps; ++k) {
    const std::uint64_t evals_before = stats.candidate_evaluations;
    const Vertex v = source.next(layer, stats);
    if (v == kNoVertex) throw ContractViolation("order source exhausted early");
    if (v < 0 || v >= g.num_vertices() || !remaining.test(v))
      throw ContractViolation("order source yielded vertex " + std::to_string(v) +
                              " twice or outside the state");
    remaining.erase(v);

    Layer next = Expand(g, layer, v);
    const std::size_t width_pre = next.nodes.size();
    const std::uint64_t merges_before = stats.merges;
    const std::uint64_t removals_before = stats.removals;

    if (bounded && width_pre > width) {
      if (!violated) {
        violated = true;
        out.last_exact_layer = layer;
        if (mode == DiagramMode::kRelaxed && (options.cutset_bounds || options.track_paths)) {
          // Re-expand from the cutset with ancestry tags and without paths.
          for (std::size_t i = 0; i < layer.nodes.size(); ++i) {
            Node& u = layer.nodes[i];
            u.path = VertexSet();
            if (options.cutset_bounds)
              u.tags.assign(1, CutTag{static_cast<std::int32_t>(i), u.value});
          }
          next = Expand(g, layer, v);
        }
      }
      if (mode == DiagramMode::kRelaxed) {
        next = relax_layer(std::move(next), width, &stats);
      } else {
        next = restrict_layer(std::move(next), width, &stats);
      }
    }
    ++stats.layers_built;
    stats.max_width = std::max(stats.max_width, next.nodes.size());
    if (options.observer) {
      options.observer(LayerTrace{next.index, v, width_pre, next.nodes.size(),
                                  stats.merges - merges_before, stats.removals - removals_before,
                                  stats.candidate_evaluations - evals_before});
    }
    layer = std::move(next);
  }
  if (source.next(layer, stats) != kNoVertex)
    throw ContractViolation("order source yielded more vertices than the state holds");

  out.is_exact = !violated;
  out.bound = layer.nodes.front().value;
  for (const Node& n : layer.nodes) out.bound = std::max(out.bound, n.value);
  if (!violated) out.last_exact_layer = layer;
  if (options.cutset_bounds) {
    if (violated) {
      out.cutset_bounds.assign(out.last_exact_layer.nodes.size(), 0);
      std::vector<bool> reached(out.cutset_bounds.size(), false);
      for (const Node& n : layer.nodes) {
        for (const CutTag& t : n.tags) {
          if (!reached[t.id] || t.value > out.cutset_bounds[t.id]) out.cutset_bounds[t.id] = t.value;
          reached[t.id] = true;
        }
      }
    } else {
      for (const Node& n : layer.nodes) out.cutset_bounds.push_back(n.value);
    }
  }
  out.terminal = std::move(layer);
  return out;
}

VertexSet best_set_extract(const CompiledDiagram& d) {
  DDC_REQUIRE(!d.terminal.nodes.empty(), "diagram not compiled");
  const Node* best = &d.terminal.nodes.front();
  for (const Node& n : d.terminal.nodes)
    if (n.value > best->value) best = &n;
  DDC_REQUIRE(best->path.universe() > 0, "diagram compiled without path tracking");
  return best->path;
}

}  // namespace ddc
