// Copyright 2026 The Burnlab Authors
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

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnlab/burning.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/transforms.hpp"

namespace burnlab {

enum class VariantKind { edge, total };

inline const char* to_string(VariantKind k) { return k == VariantKind::edge ? "edge" : "total"; }

// Burning number of L(G) or T(G); the witness uses derived-graph ids.
struct VariantResult {
  VariantKind kind = VariantKind::edge;
  DerivedGraph derived;
  SolveResult result;

  bool exact() const { return result.exact(); }
  std::size_t value() const { return result.value(); }
  const std::optional<BurningSequence>& witness() const { return result.witness; }
  const VertexMap& origin_map() const { return derived.map; }
};

inline VariantResult edge_burning_number(const Graph& g, const SolveBudget& budget = {}) {
  VariantResult out{VariantKind::edge, line_graph(g), {}};
  out.result = burning_number_exact(out.derived.graph, budget);
  return out;
}

inline VariantResult total_burning_number(const Graph& g, const SolveBudget& budget = {}) {
  if (g.empty()) throw GraphError("total burning number of the empty graph is undefined");
  VariantResult out{VariantKind::total, total_graph(g), {}};
  out.result = burning_number_exact(out.derived.graph, budget);
  return out;
}

namespace detail {

inline void require_valid(const Graph& g, const BurningSequence& b, const char* what) {
  if (auto v = validate(g, b); !v) throw GraphError(std::string(what) + ": input sequence is invalid: " + v.reason);
}

// Picks among `options` those still unburned, or nothing.
template <class Chooser>
std::optional<Vertex> pick_unburned(const SequenceBuilder& builder, const std::vector<Vertex>& options,
                                    Chooser& choose) {
  std::vector<Vertex> eligible;
  for (Vertex v : options)
    if (builder.unburned(v)) eligible.push_back(v);
  if (eligible.empty()) return std::nullopt;
  std::sort(eligible.begin(), eligible.end());
  return choose(std::span<const Vertex>(eligible));
}

}  // namespace detail

// Vertex sequence of G (horizon k) -> sequence of L(G) with horizon k+1.
// Step i places an unburned edge incident to b_i when there is one.
template <class Chooser = LowestIdChooser>
BurningSequence line_seq_from_vertex_seq(const Graph& g, const BurningSequence& b, Chooser choose = {}) {
  detail::require_valid(g, b, "line_seq_from_vertex_seq");
  const DerivedGraph lg = line_graph(g);
  const auto inc = detail::incidence(g);
  SequenceBuilder builder(lg.graph);
  for (std::size_t s = 0; s < b.horizon + 1; ++s) {
    std::optional<Vertex> proposal;
    if (s < b.sources.size()) {
      std::vector<Vertex> options(inc[b.sources[s]].begin(), inc[b.sources[s]].end());
      proposal = detail::pick_unburned(builder, options, choose);
    }
    builder.step(proposal, choose);
  }
  return builder.sequence();
}

// Sequence of L(G) (horizon k) -> vertex sequence of G with horizon k+1.
// Step i places an unburned endpoint of edge b_i when there is one.
template <class Chooser = LowestIdChooser>
BurningSequence vertex_seq_from_line_seq(const Graph& g, const BurningSequence& bl, Chooser choose = {}) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw GraphError("vertex_seq_from_line_seq: vertex " + std::to_string(v) +
                       " is isolated, so no edge sequence reaches it");
    }
  }
  const DerivedGraph lg = line_graph(g);
  detail::require_valid(lg.graph, bl, "vertex_seq_from_line_seq");
  SequenceBuilder builder(g);
  for (std::size_t s = 0; s < bl.horizon + 1; ++s) {
    std::optional<Vertex> proposal;
    if (s < bl.sources.size()) {
      const Edge& e = g.edges()[bl.sources[s]];
      proposal = detail::pick_unburned(builder, {e.u, e.v}, choose);
    }
    builder.step(proposal, choose);
  }
  return builder.sequence();
}

// Vertex sequence of G (horizon k) -> sequence of T(G) with horizon k+1. The
// sources keep their ids; the extra step picks up leftover edge vertices.
template <class Chooser = LowestIdChooser>
BurningSequence total_seq_from_vertex_seq(const Graph& g, const BurningSequence& b, Chooser choose = {}) {
  detail::require_valid(g, b, "total_seq_from_vertex_seq");
  const DerivedGraph tg = total_graph(g);
  std::vector<std::optional<Vertex>> slots(b.sources.begin(), b.sources.end());
  return complete_sequence(tg.graph, std::span<const std::optional<Vertex>>(slots), b.horizon + 1, choose);
}

// Sequence of T(G) (horizon k) -> vertex sequence of G with the same horizon.
// Edge sources become one of their endpoints, an unburned one if possible.
template <class Chooser = LowestIdChooser>
BurningSequence vertex_seq_from_total_seq(const Graph& g, const BurningSequence& a, Chooser choose = {}) {
  const DerivedGraph tg = total_graph(g);
  detail::require_valid(tg.graph, a, "vertex_seq_from_total_seq");
  const std::size_t n = g.order();
  SequenceBuilder builder(g);
  for (std::size_t s = 0; s < a.horizon; ++s) {
    std::optional<Vertex> proposal;
    if (s < a.sources.size()) {
      const Vertex x = a.sources[s];
      if (x < n) {
        proposal = x;
      } else {
        const Edge& e = g.edges()[x - n];
        proposal = detail::pick_unburned(builder, {e.u, e.v}, choose);
      }
    }
    builder.step(proposal, choose);
  }
  auto out = builder.sequence();
  out.horizon = a.horizon;
  return out;
}

enum class RelationStatus { pass, fail, unverified };

inline const char* to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::pass: return "pass";
    case RelationStatus::fail: return "fail";
    case RelationStatus::unverified: return "unverified";
  }
  return "?";
}

// Closed integer range; lo == hi when the value is known.
struct ValueRange {
  long lo = 0;
  long hi = 0;

  bool known() const { return lo == hi; }
  ValueRange operator+(long d) const { return {lo + d, hi + d}; }
};

inline ValueRange range_of(const SolveResult& r) {
  return {static_cast<long>(r.lower), static_cast<long>(r.exact() ? r.lower : r.upper)};
}

struct Relation {
  std::string name;
  std::string statement;
  ValueRange lhs;
  ValueRange rhs;
  RelationStatus status = RelationStatus::unverified;
};

struct RelationReport {
  SolveResult vertex;
  std::optional<SolveResult> edge;
  SolveResult total;
  SolveResult spike_total;
  std::vector<Relation> relations;

  bool all_pass() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const Relation& r) { return r.status == RelationStatus::pass; });
  }
  bool any_fail() const {
    return std::any_of(relations.begin(), relations.end(),
                       [](const Relation& r) { return r.status == RelationStatus::fail; });
  }
};

namespace detail {

// A budget-limited side is a range; the relation fails only when no values in
// the ranges could satisfy it.
inline Relation at_most(std::string name, std::string statement, ValueRange lhs, ValueRange rhs) {
  Relation r{std::move(name), std::move(statement), lhs, rhs, RelationStatus::unverified};
  if (lhs.hi <= rhs.lo) r.status = RelationStatus::pass;
  else if (lhs.lo > rhs.hi) r.status = RelationStatus::fail;
  return r;
}

inline Relation equal_to(std::string name, std::string statement, ValueRange lhs, ValueRange rhs) {
  Relation r{std::move(name), std::move(statement), lhs, rhs, RelationStatus::unverified};
  if (lhs.known() && rhs.known() && lhs.lo == rhs.lo) r.status = RelationStatus::pass;
  else if (lhs.hi < rhs.lo || rhs.hi < lhs.lo) r.status = RelationStatus::fail;
  return r;
}

}  // namespace detail

// Solves b(G), b(L(G)), b(T(G)) and b(T(spike(G))) separately and checks the
// relations between them. The tree relation is only listed for trees and the
// line-graph relations only when G has an edge.
inline RelationReport verify_relations(const Graph& g, const SolveBudget& budget = {}) {
  if (g.empty() || !is_connected(g)) throw GraphError("verify_relations: graph must be connected");
  RelationReport rep;
  rep.vertex = burning_number_exact(g, budget);
  if (g.size() > 0) rep.edge = burning_number_exact(line_graph(g).graph, budget);
  rep.total = burning_number_exact(total_graph(g).graph, budget);
  rep.spike_total = burning_number_exact(total_graph(spike_graph(g).graph).graph, budget);

  const ValueRange b = range_of(rep.vertex);
  if (rep.edge) {
    const ValueRange bl = range_of(*rep.edge);
    rep.relations.push_back(detail::at_most("line_lower", "b - 1 <= b_L", b + -1, bl));
    rep.relations.push_back(detail::at_most("line_upper", "b_L <= b + 1", bl, b + 1));
    if (is_tree(g)) rep.relations.push_back(detail::at_most("line_tree", "b_L <= b", bl, b));
  }
  const ValueRange bt = range_of(rep.total);
  rep.relations.push_back(detail::at_most("total_lower", "b <= b_T", b, bt));
  rep.relations.push_back(detail::at_most("total_upper", "b_T <= b + 1", bt, b + 1));
  rep.relations.push_back(
      detail::equal_to("spike_total", "b_T(spike) = b + 1", range_of(rep.spike_total), b + 1));
  return rep;
}

}  // namespace burnlab
