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
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Hop distances from every vertex in `sources` (multi-source BFS).
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> frontier;
  for (Vertex s : sources) {
    if (dist.at(s) != 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  std::vector<Vertex> next;
  for (std::uint32_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = level;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

// Dense all-pairs hop-count matrix; kUnreachable across components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_) {
    for (Vertex s = 0; s < n_; ++s) {
      auto row = bfs_distances(g, s);
      std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex a, Vertex b) const { return dist_[a * n_ + b]; }
  std::span<const std::uint32_t> row(Vertex a) const {
    return std::span<const std::uint32_t>(dist_).subspan(a * n_, n_);
  }
  bool reachable(Vertex a, Vertex b) const { return (*this)(a, b) != kUnreachable; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

// Largest finite distance from each vertex.
inline std::vector<std::uint32_t> eccentricities(const DistanceMatrix& d) {
  std::vector<std::uint32_t> ecc(d.order(), 0);
  for (Vertex v = 0; v < d.order(); ++v) {
    for (std::uint32_t x : d.row(v)) {
      if (x != kUnreachable) ecc[v] = std::max(ecc[v], x);
    }
  }
  return ecc;
}

inline std::size_t diameter(const Graph& g) {
  if (g.empty()) throw GraphError("diameter of the empty graph is undefined");
  if (!is_connected(g)) throw GraphError("diameter requires a connected graph");
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = bfs_distances(g, v);
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

// max_ball[r] = max over v of |N^r[v]|, for r = 0..max_radius. Computed with one
// BFS per vertex so it scales to gadget-sized graphs without a dense matrix.
inline std::vector<std::size_t> max_ball_sizes(const Graph& g, std::size_t max_radius) {
  std::vector<std::size_t> best(max_radius + 1, 0);
  std::vector<std::size_t> histogram;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = bfs_distances(g, v);
    histogram.assign(max_radius + 1, 0);
    for (std::uint32_t x : row) {
      if (x != kUnreachable && x <= max_radius) ++histogram[x];
    }
    std::size_t running = 0;
    for (std::size_t r = 0; r <= max_radius; ++r) {
      running += histogram[r];
      best[r] = std::max(best[r], running);
    }
  }
  return best;
}

}  // namespace burnlab
