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
#include <string>
#include <vector>

#include "burnlab/distance.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

// Smallest s with s*s >= n.
constexpr std::size_t ceil_sqrt(std::size_t n) {
  std::size_t s = 0;
  while (s * s < n) ++s;
  return s;
}

struct BoundRule {
  std::string name;
  std::size_t value = 0;
};

// lower <= b(G) <= upper, with every rule that contributed listed.
struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<BoundRule> lower_rules;
  std::vector<BoundRule> upper_rules;

  // Name of the rule achieving the bound.
  std::string lower_source() const { return best(lower_rules, lower); }
  std::string upper_source() const { return best(upper_rules, upper); }

 private:
  static std::string best(const std::vector<BoundRule>& rules, std::size_t value) {
    for (const auto& r : rules)
      if (r.value == value) return r.name;
    return {};
  }
};

// Smallest k with sum_{i=1..k} max_ball[k-i] >= n: each source i covers at
// most max_ball[k-i] vertices.
inline std::size_t ball_counting_lower_bound(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const auto max_ball = max_ball_sizes(g, n);
  std::size_t sum = 0;
  for (std::size_t k = 1;; ++k) {
    sum += max_ball[k - 1];
    if (sum >= n) return k;
  }
}

// `interval` asserts that g is an interval graph (the caller is responsible,
// e.g. through verify_interval_model); it enables the diameter sandwich
// ceil(sqrt(d+1)) <= b <= ceil(sqrt(d+1)) + 1.
inline Bounds bounds(const Graph& g, bool interval = false) {
  if (g.empty()) throw GraphError("bounds: graph is empty");
  const std::size_t n = g.order();
  Bounds b;
  b.lower_rules.push_back({"ball_counting", ball_counting_lower_bound(g)});
  b.upper_rules.push_back({"order", n});
  if (is_connected(g)) {
    const std::size_t d = diameter(g);
    b.upper_rules.push_back({"diameter_plus_one", d + 1});
    b.upper_rules.push_back({"two_sqrt_n_minus_one", 2 * ceil_sqrt(n) - 1});
    if (interval) {
      const std::size_t s = ceil_sqrt(d + 1);
      b.lower_rules.push_back({"interval_diameter", s});
      b.upper_rules.push_back({"interval_diameter", s + 1});
    }
  }
  b.lower = 0;
  for (const auto& r : b.lower_rules) b.lower = std::max(b.lower, r.value);
  b.upper = n;
  for (const auto& r : b.upper_rules) b.upper = std::min(b.upper, r.value);
  return b;
}

}  // namespace burnlab
