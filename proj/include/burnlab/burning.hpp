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
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "burnlab/distance.hpp"
#include "burnlab/graph.hpp"

namespace burnlab {

// Sources b_1..b_t placed at steps 1..t of a process that runs for `horizon`
// steps. t < horizon means nothing is placed in the trailing steps.
struct BurningSequence {
  std::vector<Vertex> sources;
  std::size_t horizon = 0;

  std::size_t length() const { return sources.size(); }
  friend bool operator==(const BurningSequence&, const BurningSequence&) = default;
};

// Burning process. At step s every vertex burned by step s-1 ignites its
// neighbours and b_s is placed; b_s must still be unburned at the end of step
// s-1, otherwise the step is recorded in `invalid_steps` and nothing ignites.
struct BurnTrace {
  // Step at which each vertex caught fire; 0 means never.
  std::vector<std::size_t> ignition;
  std::size_t steps = 0;
  std::vector<std::size_t> invalid_steps;

  bool fully_burned() const {
    return std::none_of(ignition.begin(), ignition.end(), [](std::size_t t) { return t == 0; });
  }
  std::size_t burned_by(std::size_t step) const {
    return static_cast<std::size_t>(std::count_if(ignition.begin(), ignition.end(), [&](auto t) {
      return t != 0 && t <= step;
    }));
  }
  bool clean() const { return invalid_steps.empty(); }
};

namespace detail {

inline void check_sources(const Graph& g, const BurningSequence& b) {
  for (Vertex v : b.sources) {
    if (v >= g.order()) {
      throw GraphError("burning source " + std::to_string(v) + " is not a vertex of a graph of order " +
                       std::to_string(g.order()));
    }
  }
}

}  // namespace detail

inline BurnTrace simulate(const Graph& g, const BurningSequence& b) {
  detail::check_sources(g, b);
  BurnTrace trace;
  trace.ignition.assign(g.order(), 0);
  trace.steps = b.horizon;
  std::vector<Vertex> frontier;
  std::vector<Vertex> next;
  for (std::size_t s = 1; s <= b.horizon; ++s) {
    next.clear();
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (trace.ignition[y] == 0) {
          trace.ignition[y] = s;
          next.push_back(y);
        }
      }
    }
    if (s <= b.sources.size()) {
      const Vertex src = b.sources[s - 1];
      const std::size_t t = trace.ignition[src];
      if (t != 0 && t < s) {
        trace.invalid_steps.push_back(s);
      } else if (t == 0) {
        trace.ignition[src] = s;
        next.push_back(src);
      }
    }
    frontier.swap(next);
  }
  return trace;
}

struct SequenceVerdict {
  bool valid = false;
  // Route A: every vertex lies within horizon-i of some b_i.
  bool covering = false;
  // Route A: d(b_i, b_j) >= j - i for all i < j.
  bool separation = false;
  // Route B: the simulated process burns everything and never places a source
  // on a burned vertex.
  bool simulation = false;
  bool routes_agree = false;
  std::string reason;

  explicit operator bool() const { return valid; }
};

// Checks a sequence twice, by covering + separation and by simulation. Never
// throws; out-of-range sources just make the sequence invalid.
inline SequenceVerdict validate(const Graph& g, const BurningSequence& b) {
  SequenceVerdict out;
  const std::size_t k = b.horizon;
  const std::size_t t = b.sources.size();
  for (Vertex v : b.sources) {
    if (v >= g.order()) {
      out.reason = "source " + std::to_string(v) + " out of range";
      return out;
    }
  }
  if (t > k) {
    out.reason = std::to_string(t) + " sources exceed horizon " + std::to_string(k);
    return out;
  }

  std::vector<char> covered(g.order(), 0);
  out.separation = true;
  std::string sep_reason;
  for (std::size_t i = 0; i < t; ++i) {
    auto dist = bfs_distances(g, b.sources[i]);
    const std::size_t radius = k - (i + 1);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] != kUnreachable && dist[v] <= radius) covered[v] = 1;
    }
    for (std::size_t j = i + 1; j < t && out.separation; ++j) {
      const auto d = dist[b.sources[j]];
      if (d != kUnreachable && d < j - i) {
        out.separation = false;
        sep_reason = "d(b_" + std::to_string(i + 1) + ", b_" + std::to_string(j + 1) +
                     ") = " + std::to_string(d) + " < " + std::to_string(j - i);
      }
    }
  }
  out.covering = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });

  const BurnTrace trace = simulate(g, b);
  out.simulation = trace.fully_burned() && trace.clean();

  const bool route_a = out.covering && out.separation;
  out.routes_agree = route_a == out.simulation;
  out.valid = route_a && out.simulation;
  if (!out.valid) {
    if (!out.separation) {
      out.reason = sep_reason;
    } else if (!out.covering) {
      out.reason = "some vertex is farther than its radius from every source";
    } else {
      out.reason = "simulation disagrees with covering + separation";
    }
  }
  return out;
}

// Picks the smallest id. Eligible lists are always ascending.
struct LowestIdChooser {
  Vertex operator()(std::span<const Vertex> eligible) const { return eligible.front(); }
};

class RandomChooser {
 public:
  explicit RandomChooser(std::uint64_t seed) : rng_(seed) {}
  Vertex operator()(std::span<const Vertex> eligible) {
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    return eligible[pick(rng_)];
  }

 private:
  std::mt19937_64 rng_;
};

// Runs the burning process one step at a time. Each step places the proposed
// source if it is still unburned; otherwise any unburned vertex picked by the
// chooser; if nothing is unburned the step places nothing and the sequence
// ends there.
class SequenceBuilder {
 public:
  explicit SequenceBuilder(const Graph& g) : g_(g), ignition_(g.order(), 0) {}

  // Unburned at the end of the last completed step, i.e. eligible now.
  bool unburned(Vertex v) const { return ignition_.at(v) == 0; }
  bool all_burned() const { return burned_ == g_.order(); }
  std::size_t steps() const { return steps_; }

  std::vector<Vertex> unburned_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (ignition_[v] == 0) out.push_back(v);
    return out;
  }

  template <class Chooser>
  std::optional<Vertex> step(std::optional<Vertex> proposal, Chooser&& choose) {
    ++steps_;
    std::optional<Vertex> placed;
    if (proposal && unburned(*proposal)) {
      placed = proposal;
    } else if (!all_burned()) {
      const auto eligible = unburned_vertices();
      placed = choose(std::span<const Vertex>(eligible));
    }
    std::vector<Vertex> next;
    for (Vertex x : frontier_) {
      for (Vertex y : g_.neighbors(x)) ignite(y, next);
    }
    if (placed) {
      sources_.push_back(*placed);
      ignite(*placed, next);
    }
    frontier_.swap(next);
    return placed;
  }

  std::optional<Vertex> step(std::optional<Vertex> proposal) {
    return step(proposal, LowestIdChooser{});
  }

  BurningSequence sequence() const { return {sources_, steps_}; }

 private:
  void ignite(Vertex v, std::vector<Vertex>& next) {
    if (ignition_[v] != 0) return;
    ignition_[v] = steps_;
    ++burned_;
    next.push_back(v);
  }

  const Graph& g_;
  std::vector<std::size_t> ignition_;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> sources_;
  std::size_t steps_ = 0;
  std::size_t burned_ = 0;
};

// Turns a per-step source assignment (gaps and already-burned picks allowed)
// into a valid sequence of the same horizon. Every vertex within horizon-i of
// an assigned b_i is still burned by the result, so any covering assignment
// becomes a valid burning sequence.
template <class Chooser>
BurningSequence complete_sequence(const Graph& g, std::span<const std::optional<Vertex>> slots,
                                  std::size_t horizon, Chooser&& choose) {
  if (slots.size() > horizon) throw GraphError("complete_sequence: more slots than horizon");
  SequenceBuilder builder(g);
  for (std::size_t s = 0; s < horizon; ++s) {
    std::optional<Vertex> proposal = s < slots.size() ? slots[s] : std::nullopt;
    if (proposal && *proposal >= g.order()) throw GraphError("complete_sequence: vertex out of range");
    builder.step(proposal, choose);
  }
  auto seq = builder.sequence();
  seq.horizon = horizon;
  return seq;
}

inline BurningSequence complete_sequence(const Graph& g,
                                         std::span<const std::optional<Vertex>> slots,
                                         std::size_t horizon) {
  return complete_sequence(g, slots, horizon, LowestIdChooser{});
}

}  // namespace burnlab
