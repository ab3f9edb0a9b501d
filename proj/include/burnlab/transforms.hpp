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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

enum class OriginKind { vertex, edge, leaf };

inline const char* to_string(OriginKind k) {
  switch (k) {
    case OriginKind::vertex: return "vertex";
    case OriginKind::edge: return "edge";
    case OriginKind::leaf: return "leaf";
  }
  return "?";
}

// Where a derived-graph vertex came from. `index` is a vertex id of the source
// graph for vertex/leaf origins and an index into source.edges() for edges.
struct Origin {
  OriginKind kind = OriginKind::vertex;
  std::size_t index = 0;

  friend bool operator==(const Origin&, const Origin&) = default;
};

struct VertexMap {
  std::vector<Origin> forward;

  const Origin& operator[](Vertex v) const { return forward.at(v); }

  std::optional<Vertex> find(Origin o) const {
    for (std::size_t i = 0; i < forward.size(); ++i) {
      if (forward[i] == o) return static_cast<Vertex>(i);
    }
    return std::nullopt;
  }

  // One entry per derived vertex and no origin repeated.
  bool is_bijection(std::size_t derived_order) const {
    if (forward.size() != derived_order) return false;
    for (std::size_t i = 0; i < forward.size(); ++i) {
      for (std::size_t j = i + 1; j < forward.size(); ++j) {
        if (forward[i] == forward[j]) return false;
      }
    }
    return true;
  }
};

struct DerivedGraph {
  Graph graph;
  VertexMap map;
};

namespace detail {

inline std::string edge_label(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// incident[v] = indices (into g.edges()) of edges touching v.
inline std::vector<std::vector<std::size_t>> incidence(const Graph& g) {
  std::vector<std::vector<std::size_t>> inc(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    inc[g.edges()[i].u].push_back(i);
    inc[g.edges()[i].v].push_back(i);
  }
  return inc;
}

inline void append_edge_adjacency(const Graph& g, std::size_t offset,
                                  std::vector<std::pair<Vertex, Vertex>>& out) {
  for (const auto& around : incidence(g)) {
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        out.emplace_back(static_cast<Vertex>(offset + around[i]),
                         static_cast<Vertex>(offset + around[j]));
      }
    }
  }
}

}  // namespace detail

// L(G): one vertex per edge of G, adjacent iff the edges share an endpoint.
inline DerivedGraph line_graph(const Graph& g) {
  if (g.size() == 0) throw GraphError("line_graph requires at least one edge");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  detail::append_edge_adjacency(g, 0, pairs);
  DerivedGraph out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.map.forward.push_back({OriginKind::edge, i});
    labels.push_back(detail::edge_label(g.edges()[i]));
  }
  out.graph = build_graph(g.size(), pairs, std::move(labels));
  return out;
}

// T(G) on V ⊎ E. Ids 0..n-1 are the original vertices, n+i is edge i.
inline DerivedGraph total_graph(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::pair<Vertex, Vertex>> pairs = edge_pairs(g);
  detail::append_edge_adjacency(g, n, pairs);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    pairs.emplace_back(e.u, static_cast<Vertex>(n + i));
    pairs.emplace_back(e.v, static_cast<Vertex>(n + i));
  }
  DerivedGraph out;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    out.map.forward.push_back({OriginKind::vertex, v});
    labels.push_back(g.has_labels() ? g.label(v) : std::to_string(v));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.map.forward.push_back({OriginKind::edge, i});
    labels.push_back(detail::edge_label(g.edges()[i]));
  }
  out.graph = build_graph(n + g.size(), pairs, std::move(labels));
  return out;
}

// G with a pendant leaf l_i on every vertex v_i. Ids 0..n-1 keep G, n+i is l_i.
inline DerivedGraph spike_graph(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::pair<Vertex, Vertex>> pairs = edge_pairs(g);
  for (Vertex v = 0; v < n; ++v) pairs.emplace_back(v, static_cast<Vertex>(n + v));
  DerivedGraph out;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    out.map.forward.push_back({OriginKind::vertex, v});
    labels.push_back(g.has_labels() ? g.label(v) : std::to_string(v));
  }
  for (Vertex v = 0; v < n; ++v) {
    out.map.forward.push_back({OriginKind::leaf, v});
    labels.push_back("l" + std::to_string(v));
  }
  out.graph = build_graph(2 * n, pairs, std::move(labels));
  return out;
}

// Checks that `mapping` (a[i] -> b[mapping[i]]) is an isomorphism.
inline bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping) {
  if (a.order() != b.order() || a.size() != b.size() || mapping.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Vertex x : mapping) {
    if (x >= b.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (const Edge& e : a.edges()) {
    if (!b.adjacent(mapping[e.u], mapping[e.v])) return false;
  }
  return true;
}

}  // namespace burnlab
