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
#include <stdexcept>
#include <vector>

#include "burnlab/bounds.hpp"
#include "burnlab/burning.hpp"

namespace burnlab {

enum class LineKind { path, cycle };

// Optimal sequence for P_n or C_n (vertices 0..n-1 in order; the cycle is cut
// at 0). With k = ceil(sqrt n), source i takes the next min(2(k-i)+1, rest)
// vertices from the left and sits at their centre.
inline BurningSequence path_cycle_sequence(std::size_t n, LineKind kind = LineKind::path) {
  if (n == 0) throw std::invalid_argument("path_cycle_sequence: n must be at least 1");
  if (kind == LineKind::cycle && n < 3) {
    throw std::invalid_argument("path_cycle_sequence: a cycle needs at least 3 vertices");
  }
  const std::size_t k = ceil_sqrt(n);
  BurningSequence seq;
  seq.horizon = k;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= k && start < n; ++i) {
    const std::size_t radius = k - i;
    const std::size_t centre = std::min(start + radius, n - 1);
    seq.sources.push_back(static_cast<Vertex>(centre));
    start += std::min(2 * radius + 1, n - start);
  }
  return seq;
}

// Segment sizes consumed by each source of path_cycle_sequence(n).
inline std::vector<std::size_t> path_cycle_cluster_sizes(std::size_t n) {
  const std::size_t k = ceil_sqrt(n);
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= k && start < n; ++i) {
    const std::size_t len = std::min(2 * (k - i) + 1, n - start);
    sizes.push_back(len);
    start += len;
  }
  return sizes;
}

}  // namespace burnlab
