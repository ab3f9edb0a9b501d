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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "burnlab/bounds.hpp"
#include "burnlab/burning.hpp"
#include "burnlab/distance.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/vertex_set.hpp"

namespace burnlab {

struct SolveBudget {
  // Search-node expansions across all k and all threads.
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
  unsigned threads = 1;
};

enum class SolveStatus { exact, bounded };

// Either the burning number with an optimal witness, or an interval
// lower <= b(G) <= upper when the budget ran out.
struct SolveResult {
  SolveStatus status = SolveStatus::bounded;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<BurningSequence> witness;
  std::uint64_t nodes = 0;

  bool exact() const { return status == SolveStatus::exact; }
  std::size_t value() const {
    if (!exact()) throw std::logic_error("burning number unknown: budget exhausted");
    return lower;
  }
};

namespace detail {

struct BudgetExhausted {};
struct Cancelled {};

class SharedBudget {
 public:
  explicit SharedBudget(const SolveBudget& b) : limit_(b.max_nodes) {
    if (b.time_limit) deadline_ = std::chrono::steady_clock::now() + *b.time_limit;
  }

  void charge() {
    const auto c = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (c > limit_ || exhausted_.load(std::memory_order_relaxed)) exhaust();
    if (deadline_ && (c & 1023U) == 0 && std::chrono::steady_clock::now() > *deadline_) exhaust();
  }

  std::uint64_t nodes() const { return std::min(nodes_.load(), limit_); }
  bool exhausted() const { return exhausted_.load(); }

 private:
  [[noreturn]] void exhaust() {
    exhausted_.store(true);
    throw BudgetExhausted{};
  }

  std::uint64_t limit_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

// balls[r][v] = N^r[v], grown on demand.
class BallTable {
 public:
  explicit BallTable(const DistanceMatrix& d) : d_(d) {}

  const std::vector<VertexSet>& radius(std::size_t r) {
    while (balls_.size() <= r) {
      const std::size_t rr = balls_.size();
      std::vector<VertexSet> layer(d_.order(), VertexSet(d_.order()));
      for (Vertex v = 0; v < d_.order(); ++v) {
        auto row = d_.row(v);
        for (Vertex w = 0; w < d_.order(); ++w)
          if (row[w] <= rr) layer[v].set(w);
      }
      sizes_.emplace_back();
      for (const auto& b : layer) sizes_.back().push_back(b.count());
      balls_.push_back(std::move(layer));
    }
    return balls_[r];
  }
  std::size_t size(std::size_t r, Vertex v) const { return sizes_[r][v]; }

 private:
  const DistanceMatrix& d_;
  std::vector<std::vector<VertexSet>> balls_;
  std::vector<std::vector<std::size_t>> sizes_;
};

// Decides whether k balls of radii k-1, ..., 0 can cover V. Branches on the
// uncovered vertex with the fewest (slot, centre) options, skips centres whose
// fresh coverage is dominated by another option for the same slot, and cuts
// when the best fresh coverage of all free slots cannot reach the uncovered
// count. Slots may stay empty; complete_sequence turns a cover into a valid
// sequence afterwards.
class CoverSearch {
 public:
  enum class Outcome { feasible, infeasible, unknown };

  CoverSearch(std::size_t k, BallTable& balls, const std::vector<std::size_t>& rank)
      : k_(k), rank_(rank), n_(rank.size()) {
    for (std::size_t p = 0; p < k; ++p) layers_.push_back(&balls.radius(k - 1 - p));
    balls_ = &balls;
  }

  Outcome run(SharedBudget& budget, unsigned threads, std::vector<std::optional<Vertex>>& slots) {
    Worker root(*this, budget, std::numeric_limits<std::size_t>::max(), nullptr);
    std::vector<std::pair<std::size_t, Vertex>> branches;
    try {
      budget.charge();
      if (root.expand_root(branches)) {
        slots = root.slots;
        return Outcome::feasible;
      }
    } catch (const BudgetExhausted&) {
      return Outcome::unknown;
    }
    if (branches.empty()) return Outcome::infeasible;

    std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};
    std::vector<std::optional<std::vector<std::optional<Vertex>>>> found(branches.size());
    std::atomic<bool> ran_out{false};

    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size() || i > winner.load()) return;
        Worker w(*this, budget, i, &winner);
        try {
          if (w.explore(branches[i].first, branches[i].second)) {
            found[i] = w.slots;
            std::size_t cur = winner.load();
            while (i < cur && !winner.compare_exchange_weak(cur, i)) {
            }
          }
        } catch (const BudgetExhausted&) {
          ran_out = true;
          return;
        } catch (const Cancelled&) {
        }
      }
    };
    const unsigned t = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(branches.size())));
    if (t == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < t; ++i) pool.emplace_back(work);
    }
    const std::size_t best = winner.load();
    if (best != std::numeric_limits<std::size_t>::max()) {
      slots = *found[best];
      return Outcome::feasible;
    }
    return ran_out ? Outcome::unknown : Outcome::infeasible;
  }

 private:
  struct Worker {
    Worker(const CoverSearch& s, SharedBudget& b, std::size_t branch,
           const std::atomic<std::size_t>* winner)
        : search(s), budget(b), branch_id(branch), winner(winner),
          slots(s.k_), covered(s.k_ + 2, VertexSet(s.n_)) {}

    bool expand_root(std::vector<std::pair<std::size_t, Vertex>>& branches) {
      return expand(0, &branches);
    }

    bool explore(std::size_t slot, Vertex v) {
      slots[slot] = v;
      covered[1] = covered[0];
      covered[1] |= (*search.layers_[slot])[v];
      return dfs(1);
    }

    bool dfs(std::size_t depth) {
      budget.charge();
      if (winner && winner->load(std::memory_order_relaxed) < branch_id) throw Cancelled{};
      return expand(depth, nullptr);
    }

    // With `collect` set, records the root branches instead of descending.
    bool expand(std::size_t depth, std::vector<std::pair<std::size_t, Vertex>>* collect) {
      const VertexSet& cov = covered[depth];
      const std::size_t uncovered = search.n_ - cov.count();
      if (uncovered == 0) return true;

      std::vector<std::size_t> free;
      for (std::size_t p = 0; p < search.k_; ++p)
        if (!slots[p]) free.push_back(p);
      if (free.empty()) return false;

      std::size_t capacity = 0;
      for (std::size_t p : free) {
        std::size_t best = 0;
        for (const auto& ball : *search.layers_[p]) best = std::max(best, ball.count_minus(cov));
        capacity += best;
        if (capacity >= uncovered) break;
      }
      if (capacity < uncovered) return false;

      Vertex pivot = 0;
      std::size_t fewest = std::numeric_limits<std::size_t>::max();
      cov.for_each_missing([&](Vertex u) {
        std::size_t options = 0;
        for (std::size_t p : free) options += search.balls_->size(search.k_ - 1 - p, u);
        if (options < fewest) {
          fewest = options;
          pivot = u;
        }
      });

      std::vector<Vertex> cands;
      for (std::size_t p : free) {
        const auto& layer = *search.layers_[p];
        cands.clear();
        layer[pivot].for_each([&](Vertex v) { cands.push_back(v); });
        std::sort(cands.begin(), cands.end(),
                  [&](Vertex a, Vertex b) { return search.rank_[a] < search.rank_[b]; });
        for (Vertex v : cands) {
          if (dominated(layer, cands, v, cov)) continue;
          if (collect) {
            collect->emplace_back(p, v);
            continue;
          }
          slots[p] = v;
          covered[depth + 1] = cov;
          covered[depth + 1] |= layer[v];
          if (dfs(depth + 1)) return true;
          slots[p].reset();
        }
      }
      return false;
    }

    bool dominated(const std::vector<VertexSet>& layer, const std::vector<Vertex>& cands, Vertex v,
                   const VertexSet& cov) const {
      for (Vertex w : cands) {
        if (w == v || !layer[v].subset_outside(layer[w], cov)) continue;
        const bool equal = layer[w].subset_outside(layer[v], cov);
        if (!equal || search.rank_[w] < search.rank_[v]) return true;
      }
      return false;
    }

    const CoverSearch& search;
    SharedBudget& budget;
    std::size_t branch_id;
    const std::atomic<std::size_t>* winner;
    std::vector<std::optional<Vertex>> slots;
    std::vector<VertexSet> covered;
  };

  std::size_t k_;
  const std::vector<std::size_t>& rank_;
  std::size_t n_;
  std::vector<const std::vector<VertexSet>*> layers_;
  BallTable* balls_ = nullptr;
};

// Candidate order: decreasing eccentricity, then id.
inline std::vector<std::size_t> candidate_rank(const DistanceMatrix& d) {
  const auto ecc = eccentricities(d);
  std::vector<Vertex> order(d.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return ecc[a] > ecc[b]; });
  std::vector<std::size_t> rank(d.order());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

}  // namespace detail

// Exact burning number by iterative deepening on k from the ball-counting
// lower bound. Works on disconnected graphs too. When the budget runs out the
// result is the interval [first undecided k, upper bound], never a guess.
inline SolveResult burning_number_exact(const Graph& g, const SolveBudget& budget = {}) {
  if (g.empty()) throw GraphError("burning number of the empty graph is undefined");
  const Bounds b = bounds(g);
  const DistanceMatrix d(g);
  const auto rank = detail::candidate_rank(d);
  detail::BallTable balls(d);
  detail::SharedBudget shared(budget);

  SolveResult result;
  for (std::size_t k = b.lower;; ++k) {
    detail::CoverSearch search(k, balls, rank);
    std::vector<std::optional<Vertex>> slots;
    const auto outcome = search.run(shared, budget.threads, slots);
    if (outcome == detail::CoverSearch::Outcome::unknown) {
      result.status = SolveStatus::bounded;
      result.lower = k;
      result.upper = b.upper;
      result.nodes = shared.nodes();
      return result;
    }
    if (outcome == detail::CoverSearch::Outcome::feasible) {
      auto seq = complete_sequence(g, std::span<const std::optional<Vertex>>(slots), k);
      if (!validate(g, seq)) throw std::logic_error("exact solver produced an invalid witness");
      result.status = SolveStatus::exact;
      result.lower = result.upper = k;
      result.witness = std::move(seq);
      result.nodes = shared.nodes();
      return result;
    }
    if (k >= b.upper) throw std::logic_error("no cover found at the proven upper bound");
  }
}

// Brute force over every k-tuple of centres (repetition allowed) for
// k = 1, 2, ...; distances from Floyd-Warshall. Shares nothing with
// burning_number_exact beyond the Graph type.
inline std::size_t burning_number_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > 12) {
    throw std::invalid_argument("burning_number_oracle: needs 1 <= n <= 12, got " +
                                std::to_string(n));
  }
  constexpr std::size_t kInf = 1000;
  std::vector<std::size_t> dist(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0;
  for (const Edge& e : g.edges()) dist[e.u * n + e.v] = dist[e.v * n + e.u] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i * n + j] = std::min(dist[i * n + j], dist[i * n + m] + dist[m * n + j]);

  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> tuple(k, 0);
    for (;;) {
      bool all = true;
      for (std::size_t v = 0; v < n && all; ++v) {
        bool hit = false;
        for (std::size_t i = 0; i < k && !hit; ++i) hit = dist[v * n + tuple[i]] <= k - 1 - i;
        all = hit;
      }
      if (all) return k;
      std::size_t pos = 0;
      while (pos < k && ++tuple[pos] == n) tuple[pos++] = 0;
      if (pos == k) break;
    }
  }
}

}  // namespace burnlab
