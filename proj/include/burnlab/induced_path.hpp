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
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

namespace detail {

// Grows induced paths from their last vertex. A vertex w extends the path iff
// it is adjacent to the tail and to no other path vertex.
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, std::size_t cap)
      : g_(g), cap_(cap), touch_(g.order(), 0), on_path_(g.order(), false) {}

  std::size_t run() {
    for (Vertex s = 0; s < g_.order() && best_ < cap_; ++s) {
      push(s);
      extend();
      pop();
    }
    return best_;
  }

  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = true;
    for (Vertex w : g_.neighbors(v)) ++touch_[w];
  }
  void pop() {
    Vertex v = path_.back();
    path_.pop_back();
    on_path_[v] = false;
    for (Vertex w : g_.neighbors(v)) --touch_[w];
  }

  void extend() {
    if (path_.size() > best_) {
      best_ = path_.size();
      witness_ = path_;
    }
    if (best_ >= cap_) return;
    const Vertex tail = path_.back();
    for (Vertex w : g_.neighbors(tail)) {
      if (on_path_[w] || touch_[w] != 1) continue;
      push(w);
      extend();
      pop();
      if (best_ >= cap_) return;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::size_t best_ = 0;
  std::vector<std::size_t> touch_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  std::vector<Vertex> witness_;
};

}  // namespace detail

// Vertex count of the longest induced path, truncated at `cap` (0 means n).
inline std::size_t longest_induced_path(const Graph& g, std::size_t cap = 0) {
  if (cap == 0) cap = g.order();
  detail::InducedPathSearch search(g, cap);
  return std::min(search.run(), cap);
}

// An induced path on `length` vertices, if one exists.
inline std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, std::size_t length) {
  if (length == 0) return std::vector<Vertex>{};
  detail::InducedPathSearch search(g, length);
  if (search.run() < length) return std::nullopt;
  return search.witness();
}

inline bool is_pk_free(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("is_pk_free: k must be positive");
  return longest_induced_path(g, k) < k;
}

// Vertex order along g when g is isomorphic to a path, starting at the
// smaller-id endpoint.
inline std::optional<std::vector<Vertex>> path_order(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.size() + 1 != n || !is_connected(g)) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  std::optional<Vertex> start;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && !start) start = v;
  }
  std::vector<Vertex> order{*start};
  Vertex prev = *start;
  Vertex cur = g.neighbors(*start)[0];
  order.push_back(cur);
  while (order.size() < n) {
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace burnlab
