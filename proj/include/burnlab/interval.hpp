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
#include <optional>
#include <string>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool intersects(const Interval& o) const { return std::max(lo, o.lo) <= std::min(hi, o.hi); }
  bool properly_contains(const Interval& o) const {
    return lo <= o.lo && o.hi <= hi && (lo != o.lo || hi != o.hi);
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// One closed integer interval per vertex.
struct IntervalModel {
  std::vector<Interval> intervals;
};

struct IntervalVerdict {
  bool valid = false;
  // First violation found, empty when valid.
  std::string reason;

  explicit operator bool() const { return valid; }
};

inline IntervalVerdict verify_interval_model(const Graph& g, const IntervalModel& model,
                                             bool proper) {
  const auto& iv = model.intervals;
  if (iv.size() != g.order()) {
    throw GraphError("interval model has " + std::to_string(iv.size()) + " intervals for " +
                     std::to_string(g.order()) + " vertices");
  }
  for (Vertex v = 0; v < iv.size(); ++v) {
    if (iv[v].lo > iv[v].hi) return {false, "interval of vertex " + std::to_string(v) + " is empty"};
  }
  for (Vertex a = 0; a < iv.size(); ++a) {
    for (Vertex b = a + 1; b < iv.size(); ++b) {
      const bool meet = iv[a].intersects(iv[b]);
      if (meet != g.adjacent(a, b)) {
        return {false, "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                           (meet ? " intersect but are not adjacent"
                                 : " are adjacent but do not intersect")};
      }
      if (proper && (iv[a].properly_contains(iv[b]) || iv[b].properly_contains(iv[a]))) {
        return {false, "intervals of " + std::to_string(a) + " and " + std::to_string(b) +
                           " are nested"};
      }
    }
  }
  return {true, {}};
}

// Proper model for a path 0..len-1 plus extra vertices that are each adjacent to
// exactly two consecutive path vertices. spike_after[j] = i places spike j
// between path vertices i and i+1; spike ids follow the path ids.
//   path vertex i -> [4i, 4i+4],  spike between i and i+1 -> [4i+3, 4i+5]
// Consecutive spikes stay disjoint and no interval nests in another.
inline IntervalModel spiked_path_interval_model(std::size_t len,
                                                const std::vector<std::size_t>& spike_after) {
  IntervalModel m;
  m.intervals.reserve(len + spike_after.size());
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = static_cast<std::int64_t>(i);
    m.intervals.push_back({4 * x, 4 * x + 4});
  }
  for (std::size_t i : spike_after) {
    const auto x = static_cast<std::int64_t>(i);
    m.intervals.push_back({4 * x + 3, 4 * x + 5});
  }
  return m;
}

}  // namespace burnlab
