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

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnlab/burning.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/induced_path.hpp"
#include "burnlab/path_cycle.hpp"

namespace burnlab {

// Shape of G[D] relative to P_{k-2}.
enum class CdsKind { pk2_free, iso_pk2 };

inline const char* to_string(CdsKind k) { return k == CdsKind::pk2_free ? "pk2_free" : "iso_pk2"; }

struct CdsCertificate {
  std::vector<Vertex> vertices;  // ascending
  // Set only when a k was supplied.
  std::optional<CdsKind> kind;
  std::size_t k = 0;
};

namespace detail {

inline bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  if (mask == 0) return false;
  std::uint64_t seen = mask & (~mask + 1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

}  // namespace detail

// Minimum connected dominating set by trying every subset of size 1, 2, ...
// in lexicographic order, so ties go to the lexicographically smallest set.
// With k given, also classifies G[D]; a set that is neither P_{k-2}-free nor
// a path on k-2 vertices aborts, since that cannot happen for a P_k-free G.
inline CdsCertificate minimum_connected_dominating_set(const Graph& g,
                                                        std::optional<std::size_t> k = std::nullopt) {
  const std::size_t n = g.order();
  if (n == 0 || !is_connected(g)) throw GraphError("connected dominating set needs a connected graph");
  if (n > 64) throw GraphError("connected dominating set search is limited to 64 vertices");

  std::vector<std::uint64_t> adj(n, 0);
  std::vector<std::uint64_t> closed(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  for (std::size_t v = 0; v < n; ++v) closed[v] = adj[v] | (std::uint64_t{1} << v);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  CdsCertificate cert;
  for (std::size_t s = 1; s <= n && cert.vertices.empty(); ++s) {
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
      std::uint64_t mask = 0;
      std::uint64_t dom = 0;
      for (std::size_t v : pick) {
        mask |= std::uint64_t{1} << v;
        dom |= closed[v];
      }
      if (dom == all && detail::mask_connected(adj, mask)) {
        for (std::size_t v : pick) cert.vertices.push_back(static_cast<Vertex>(v));
        break;
      }
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  if (k) {
    if (*k < 3) throw GraphError("classifying a dominating set needs k >= 3");
    cert.k = *k;
    const Graph inner = induced_subgraph(g, cert.vertices);
    const std::size_t target = *k - 2;
    if (longest_induced_path(inner, target) < target) {
      cert.kind = CdsKind::pk2_free;
    } else if (inner.order() == target && path_order(inner)) {
      cert.kind = CdsKind::iso_pk2;
    } else {
      throw std::logic_error("minimum connected dominating set of size " +
                             std::to_string(inner.order()) + " is neither P_" + std::to_string(target) +
                             "-free nor a path on " + std::to_string(target) +
                             " vertices; the input is not P_" + std::to_string(*k) + "-free");
    }
  }
  return cert;
}

// Extends a valid sequence of G[D] (local ids, D[i] <-> i) to G with one more
// step. Sources already burned in G are replaced by unburned vertices, which
// keeps every ball covered.
inline BurningSequence lift_by_domination(const Graph& g, std::span<const Vertex> dominating,
                                          const BurningSequence& inner) {
  const Graph sub = induced_subgraph(g, dominating);
  if (auto v = validate(sub, inner); !v) {
    throw GraphError("lift_by_domination: inner sequence is invalid on G[D]: " + v.reason);
  }
  std::vector<char> dominated(g.order(), 0);
  for (Vertex d : dominating) {
    dominated[d] = 1;
    for (Vertex w : g.neighbors(d)) dominated[w] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!dominated[v]) throw GraphError("lift_by_domination: vertex " + std::to_string(v) + " is not dominated");
  }
  std::vector<std::optional<Vertex>> slots;
  for (Vertex s : inner.sources) slots.emplace_back(dominating[s]);
  return complete_sequence(g, std::span<const std::optional<Vertex>>(slots), inner.horizon + 1);
}

// Sequence of length at most ceil((k+1)/2) for a connected P_k-free graph.
inline BurningSequence pkfree_sequence(const Graph& g, std::size_t k) {
  if (k < 2) throw GraphError("pkfree_sequence: k must be at least 2");
  if (g.empty() || !is_connected(g)) throw GraphError("pkfree_sequence: graph must be connected");
  if (!is_pk_free(g, k)) {
    throw GraphError("pkfree_sequence: graph contains an induced path on " + std::to_string(k) + " vertices");
  }
  if (g.order() == 1) return {{0}, 1};
  if (k == 3) return {{0, 1}, 2};  // complete graph

  const CdsCertificate cds = minimum_connected_dominating_set(g, k);
  const Graph inner = induced_subgraph(g, cds.vertices);
  BurningSequence inner_seq;
  if (cds.kind == CdsKind::iso_pk2) {
    const auto order = *path_order(inner);
    inner_seq = path_cycle_sequence(order.size());
    for (Vertex& s : inner_seq.sources) s = order[s];
  } else {
    inner_seq = pkfree_sequence(inner, k - 2);
  }
  return lift_by_domination(g, cds.vertices, inner_seq);
}

}  // namespace burnlab
