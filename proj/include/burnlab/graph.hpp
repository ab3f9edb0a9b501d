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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnlab {

using Vertex = std::uint32_t;

// Normalized undirected edge: u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected simple graph on dense vertex ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return adjacency_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& row = adjacency_.at(a);
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const {
    static const std::string kEmpty;
    return labels_.empty() ? kEmpty : labels_.at(v);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of edge {a,b} in edges(), or size() when absent.
  std::size_t edge_index(Vertex a, Vertex b) const {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return (it != edges_.end() && *it == key) ? static_cast<std::size_t>(it - edges_.begin())
                                              : edges_.size();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                           std::vector<std::string> labels);

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Validates and normalizes an edge list. Duplicate edges collapse; self-loops
// and out-of-range endpoints are rejected with the offending pair in the message.
inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                         std::vector<std::string> labels = {}) {
  if (!labels.empty() && labels.size() != n) {
    throw GraphError("label count " + std::to_string(labels.size()) + " does not match order " +
                     std::to_string(n));
  }
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a >= n || b >= n) {
      throw GraphError("edge " + pair + " has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) throw GraphError("edge " + pair + " is a self-loop");
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  g.labels_ = std::move(labels);
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
                         std::vector<std::string> labels = {}) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
                     std::move(labels));
}

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         std::vector<std::string> labels = {}) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges), std::move(labels));
}

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

inline Graph without_edge(const Graph& g, Vertex a, Vertex b) {
  auto pairs = edge_pairs(g);
  const Edge key{std::min(a, b), std::max(a, b)};
  std::erase_if(pairs, [&](const auto& p) { return p.first == key.u && p.second == key.v; });
  return build_graph(g.order(), pairs, g.labels());
}

inline Graph with_edge(const Graph& g, Vertex a, Vertex b) {
  auto pairs = edge_pairs(g);
  pairs.emplace_back(a, b);
  return build_graph(g.order(), pairs, g.labels());
}

// Component id per vertex, numbered in order of smallest member.
inline std::vector<std::size_t> component_ids(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), kUnset);
  std::size_t next = 0;
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    queue.push(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] == kUnset) {
          comp[y] = next;
          queue.push(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline std::size_t component_count(const Graph& g) {
  auto comp = component_ids(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

inline bool is_tree(const Graph& g) { return is_connected(g) && g.size() + 1 == g.order(); }

inline std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// Subgraph induced by `keep` (any order, no duplicates). Local id i maps to keep[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> local(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw GraphError("induced_subgraph: vertex out of range");
    if (local[keep[i]] != static_cast<Vertex>(-1)) {
      throw GraphError("induced_subgraph: duplicate vertex " + std::to_string(keep[i]));
    }
    local[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != static_cast<Vertex>(-1) && local[e.v] != static_cast<Vertex>(-1)) {
      pairs.emplace_back(local[e.u], local[e.v]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex v : keep) labels.push_back(g.label(v));
  }
  return build_graph(keep.size(), pairs, std::move(labels));
}

// True when no vertex has three pairwise non-adjacent neighbours.
inline bool is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace burnlab
