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
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burnlab/graph.hpp"
#include "burnlab/interval.hpp"

namespace burnlab {

namespace gen {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

inline Graph path(std::size_t n) {
  if (n == 0) throw GraphError("path: n must be at least 1");
  Pairs e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle: n must be at least 3");
  Pairs e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return build_graph(n, e);
}

inline Graph complete(std::size_t n) {
  if (n == 0) throw GraphError("complete: n must be at least 1");
  Pairs e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

// K_{1,leaves}; the centre is vertex 0.
inline Graph star(std::size_t leaves) {
  if (leaves == 0) throw GraphError("star: needs at least one leaf");
  Pairs e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("complete_bipartite: both sides must be nonempty");
  Pairs e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  return build_graph(a + b, e);
}

// Spider with r legs of r-1 vertices each around centre 0; leg l occupies
// ids 1+l(r-1) .. (l+1)(r-1), nearest the centre first.
inline Graph spider(std::size_t r) {
  if (r < 2) throw GraphError("spider: r must be at least 2");
  Pairs e;
  const std::size_t leg = r - 1;
  for (std::size_t l = 0; l < r; ++l) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < leg; ++j) {
      auto v = static_cast<Vertex>(1 + l * leg + j);
      e.emplace_back(prev, v);
      prev = v;
    }
  }
  return build_graph(1 + r * leg, e);
}

// K_{4,4} on x1..x4 / y1..y4 with a pendant x'_i on each x_i and y'_i on each y_i.
inline Graph gtilde() {
  Pairs e;
  std::vector<std::string> labels(16);
  for (Vertex i = 0; i < 4; ++i) {
    labels[i] = "x" + std::to_string(i + 1);
    labels[4 + i] = "x'" + std::to_string(i + 1);
    labels[8 + i] = "y" + std::to_string(i + 1);
    labels[12 + i] = "y'" + std::to_string(i + 1);
    for (Vertex j = 0; j < 4; ++j) e.emplace_back(i, 8 + j);
    e.emplace_back(i, 4 + i);
    e.emplace_back(8 + i, 12 + i);
  }
  return build_graph(16, e, std::move(labels));
}

// Spine 0..spine_len-1; leaves_at[i] pendant leaves hang off spine vertex i
// and are numbered after the spine in spine order.
inline Graph caterpillar(std::size_t spine_len, const std::vector<std::size_t>& leaves_at) {
  if (spine_len == 0) throw GraphError("caterpillar: spine must be nonempty");
  if (leaves_at.size() != spine_len) throw GraphError("caterpillar: leaves_at size mismatch");
  Pairs e;
  for (Vertex i = 0; i + 1 < spine_len; ++i) e.emplace_back(i, i + 1);
  auto next = static_cast<Vertex>(spine_len);
  for (Vertex i = 0; i < spine_len; ++i)
    for (std::size_t j = 0; j < leaves_at[i]; ++j) e.emplace_back(i, next++);
  return build_graph(next, e);
}

// Interval model (not proper in general) for caterpillar(spine_len, leaves_at).
inline IntervalModel caterpillar_interval_model(std::size_t spine_len,
                                                const std::vector<std::size_t>& leaves_at) {
  std::size_t widest = 0;
  for (auto c : leaves_at) widest = std::max(widest, c);
  const auto step = static_cast<std::int64_t>(widest + 2);
  IntervalModel m;
  for (std::size_t i = 0; i < spine_len; ++i) {
    const auto x = static_cast<std::int64_t>(i);
    m.intervals.push_back({step * x, step * x + step});
  }
  for (std::size_t i = 0; i < spine_len; ++i) {
    for (std::size_t j = 0; j < leaves_at[i]; ++j) {
      const auto p = step * static_cast<std::int64_t>(i) + 1 + static_cast<std::int64_t>(j);
      m.intervals.push_back({p, p});
    }
  }
  return m;
}

// Path 0..len-1 plus one vertex per entry of spike_after, adjacent to path
// vertices i and i+1 (ids follow the path).
inline Graph spiked_path(std::size_t len, const std::vector<std::size_t>& spike_after,
                         std::vector<std::string> labels = {}) {
  if (len == 0) throw GraphError("spiked_path: path must be nonempty");
  Pairs e;
  for (Vertex i = 0; i + 1 < len; ++i) e.emplace_back(i, i + 1);
  auto next = static_cast<Vertex>(len);
  for (std::size_t i : spike_after) {
    if (i + 1 >= len) throw GraphError("spiked_path: spike position out of range");
    e.emplace_back(static_cast<Vertex>(i), next);
    e.emplace_back(static_cast<Vertex>(i + 1), next);
    ++next;
  }
  return build_graph(next, e, std::move(labels));
}

// Uniform random recursive tree, relabelled by a random permutation.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GraphError("random_tree: n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Pairs e;
  for (Vertex i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> parent(0, i - 1);
    e.emplace_back(perm[i], perm[parent(rng)]);
  }
  return build_graph(n, e);
}

// Random spanning tree plus each remaining pair independently with probability p.
inline Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw GraphError("random_connected: n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("random_connected: p must lie in [0,1]");
  Graph tree = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(p);
  Pairs e = edge_pairs(tree);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!tree.adjacent(i, j) && coin(rng)) e.emplace_back(i, j);
  return build_graph(n, e);
}

struct RandomCaterpillar {
  std::size_t spine_len = 0;
  std::vector<std::size_t> leaves_at;
  Graph graph;
};

// Caterpillar on exactly n vertices: random spine length, leaves spread over
// internal spine vertices.
inline RandomCaterpillar random_caterpillar(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GraphError("random_caterpillar: n must be at least 1");
  std::mt19937_64 rng(seed);
  RandomCaterpillar c;
  if (n <= 2) {
    c.spine_len = n;
  } else {
    std::uniform_int_distribution<std::size_t> len(3, n);
    c.spine_len = len(rng);
  }
  c.leaves_at.assign(c.spine_len, 0);
  if (c.spine_len >= 3) {
    std::uniform_int_distribution<std::size_t> where(1, c.spine_len - 2);
    for (std::size_t i = c.spine_len; i < n; ++i) ++c.leaves_at[where(rng)];
  }
  c.graph = caterpillar(c.spine_len, c.leaves_at);
  return c;
}

}  // namespace gen

// A named family plus key=value parameters, written "name" or "name:k=v,k=v".
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;

  static FamilySpec parse(std::string_view text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw GraphError("family parameter '" + std::string(item) + "' is not key=value");
      }
      spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return spec;
  }

  std::uint64_t integer(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw GraphError("family '" + name + "' needs parameter " + key);
    std::uint64_t value = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw GraphError("parameter " + key + "='" + s + "' is not a non-negative integer");
    }
    return value;
  }

  double real(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw GraphError("family '" + name + "' needs parameter " + key);
    try {
      std::size_t used = 0;
      double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw GraphError("parameter " + key + "='" + it->second + "' is not a number");
    }
  }
};

// Families: path:n, cycle:n, complete:n, star:leaves, bipartite:a,b, spider:r,
// gtilde, random_tree:n,seed, random_connected:n,p,seed, caterpillar:n,seed.
inline Graph generate(const FamilySpec& spec) {
  const auto& f = spec.name;
  if (f == "path") return gen::path(spec.integer("n"));
  if (f == "cycle") return gen::cycle(spec.integer("n"));
  if (f == "complete") return gen::complete(spec.integer("n"));
  if (f == "star") return gen::star(spec.integer("leaves"));
  if (f == "bipartite") return gen::complete_bipartite(spec.integer("a"), spec.integer("b"));
  if (f == "spider") return gen::spider(spec.integer("r"));
  if (f == "gtilde") return gen::gtilde();
  if (f == "random_tree") return gen::random_tree(spec.integer("n"), spec.integer("seed"));
  if (f == "random_connected") {
    return gen::random_connected(spec.integer("n"), spec.real("p"), spec.integer("seed"));
  }
  if (f == "caterpillar") {
    return gen::random_caterpillar(spec.integer("n"), spec.integer("seed")).graph;
  }
  throw GraphError("unknown graph family '" + f + "'");
}

inline Graph generate(std::string_view text) { return generate(FamilySpec::parse(text)); }

}  // namespace burnlab
