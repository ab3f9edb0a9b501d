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

// Reference computations for the tests. Everything here is deliberately
// naive and shares no code with the library beyond the Graph type.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab::testing {

constexpr std::uint32_t kFar = 1'000'000;

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool adjacent_naive(const Graph& g, Vertex a, Vertex b) {
  for (const Edge& e : g.edges())
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
  return false;
}

// Does the vertex subset `mask` induce a path (a single vertex counts)?
inline bool mask_induces_path(const Graph& g, std::uint32_t mask) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mask >> v & 1U) s.push_back(v);
  if (s.empty()) return false;
  std::size_t edges = 0;
  std::vector<int> deg(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (adjacent_naive(g, s[i], s[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges + 1 != s.size()) return false;
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d > 2; })) return false;
  // a forest with |S|-1 edges is connected; check acyclic via union-find
  std::vector<std::size_t> parent(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (adjacent_naive(g, s[i], s[j])) {
        auto a = find(i), b = find(j);
        if (a == b) return false;
        parent[a] = b;
      }
  return true;
}

// Largest vertex subset inducing a path, by enumerating all 2^n subsets.
inline std::size_t brute_longest_induced_path(const Graph& g) {
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << g.order()); ++mask) {
    const auto c = static_cast<std::size_t>(__builtin_popcount(mask));
    if (c > best && mask_induces_path(g, mask)) best = c;
  }
  return best;
}

inline bool mask_connected_dominating(const Graph& g, std::uint32_t mask) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    if (mask >> v & 1U) continue;
    bool hit = false;
    for (Vertex w = 0; w < n && !hit; ++w) hit = (mask >> w & 1U) && adjacent_naive(g, v, w);
    if (!hit) return false;
  }
  // connectivity of G[mask] by repeated relaxation
  std::uint32_t seen = mask & (~mask + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!(mask >> v & 1U) || (seen >> v & 1U)) continue;
      for (Vertex w = 0; w < n; ++w) {
        if ((seen >> w & 1U) && adjacent_naive(g, v, w)) {
          seen |= 1U << v;
          grew = true;
          break;
        }
      }
    }
  }
  return seen == mask;
}

inline std::size_t brute_min_cds_size(const Graph& g) {
  std::size_t best = g.order();
  for (std::uint32_t mask = 1; mask < (1U << g.order()); ++mask) {
    const auto c = static_cast<std::size_t>(__builtin_popcount(mask));
    if (c < best && mask_connected_dominating(g, mask)) best = c;
  }
  return best;
}

// Every assignment of a triple label to each element with each label used
// three times; true when some assignment gives all triples the same sum.
inline bool brute_has_triple_partition(const std::vector<std::uint64_t>& xs) {
  const std::size_t n = xs.size() / 3;
  if (n == 0 || xs.size() % 3 != 0) return false;
  std::uint64_t total = 0;
  for (auto x : xs) total += x;
  if (total % n != 0) return false;
  const std::uint64_t target = total / n;
  std::vector<std::size_t> label(xs.size(), 0);
  for (;;) {
    std::vector<std::size_t> count(n, 0);
    std::vector<std::uint64_t> sum(n, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ++count[label[i]];
      sum[label[i]] += xs[i];
    }
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) ok = count[t] == 3 && sum[t] == target;
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < xs.size() && ++label[pos] == n) label[pos++] = 0;
    if (pos == xs.size()) return false;
  }
}

// Some k-tuple of centres (repetition allowed) covers V with radii k-1..0.
inline bool brute_covers(const Graph& g, std::size_t k) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> t(k, 0);
  for (;;) {
    bool all = true;
    for (std::size_t v = 0; v < n && all; ++v) {
      bool hit = false;
      for (std::size_t i = 0; i < k && !hit; ++i) hit = d[v][t[i]] <= k - 1 - i;
      all = hit;
    }
    if (all) return true;
    std::size_t pos = 0;
    while (pos < k && ++t[pos] == n) t[pos++] = 0;
    if (pos == k) return false;
  }
}

inline std::size_t brute_burning_number(const Graph& g) {
  for (std::size_t k = 1;; ++k)
    if (brute_covers(g, k)) return k;
}

// Random labelled tree from a uniform Pruefer sequence.
inline Graph pruefer_tree(std::size_t n, std::mt19937_64& rng) {
  using Pairs = std::vector<std::pair<Vertex, Vertex>>;
  if (n == 1) return build_graph(1, Pairs{});
  if (n == 2) return build_graph(2, Pairs{{0, 1}});
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return build_graph(n, edges);
}

// Pruefer tree plus each remaining pair with probability p.
inline Graph tree_plus_edges(std::size_t n, double p, std::mt19937_64& rng) {
  const Graph t = pruefer_tree(n, rng);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : t.edges()) edges.insert({e.u, e.v});
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng) < p) edges.insert({a, b});
  return build_graph(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
}

// `count` connected graphs with orders in [lo, hi] and mixed densities.
inline std::vector<Graph> connected_corpus(std::uint64_t seed, std::size_t count, std::size_t lo, std::size_t hi) {
  std::mt19937_64 rng(seed);
  const double densities[] = {0.0, 0.1, 0.2, 0.35, 0.5, 0.7};
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = lo + rng() % (hi - lo + 1);
    out.push_back(tree_plus_edges(n, densities[i % 6], rng));
  }
  return out;
}

inline std::vector<Graph> tree_corpus(std::uint64_t seed, std::size_t count, std::size_t lo, std::size_t hi) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(pruefer_tree(lo + rng() % (hi - lo + 1), rng));
  return out;
}

}  // namespace burnlab::testing
