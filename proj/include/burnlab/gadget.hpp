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
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnlab/burning.hpp"
#include "burnlab/distance.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/interval.hpp"
#include "burnlab/transforms.hpp"

namespace burnlab {

// A malformed 3-partition instance; rule() names the violated condition.
class InstanceError : public std::invalid_argument {
 public:
  InstanceError(std::string rule, const std::string& detail)
      : std::invalid_argument(rule + ": " + detail), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

using Triple = std::array<std::uint64_t, 3>;
using Partition = std::vector<Triple>;

// 3n distinct positive integers with sum nB and B/4 < a < B/2 for each a.
struct ThreePartitionInstance {
  std::vector<std::uint64_t> X;  // ascending
  std::size_t n = 0;
  std::uint64_t B = 0;

  std::uint64_t m() const { return X.back(); }

  static ThreePartitionInstance make(std::vector<std::uint64_t> xs) {
    if (xs.empty() || xs.size() % 3 != 0) {
      throw InstanceError("count", "need a positive multiple of 3 elements, got " + std::to_string(xs.size()));
    }
    std::sort(xs.begin(), xs.end());
    if (xs.front() == 0) throw InstanceError("positive", "elements must be positive");
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (xs[i] == xs[i - 1]) throw InstanceError("distinct", "element " + std::to_string(xs[i]) + " repeats");
    }
    ThreePartitionInstance inst;
    inst.n = xs.size() / 3;
    const std::uint64_t sum = std::accumulate(xs.begin(), xs.end(), std::uint64_t{0});
    if (sum % inst.n != 0) {
      throw InstanceError("divisible", "sum " + std::to_string(sum) + " is not a multiple of n = " +
                                           std::to_string(inst.n));
    }
    inst.B = sum / inst.n;
    for (auto a : xs) {
      if (4 * a <= inst.B) {
        throw InstanceError("lower", std::to_string(a) + " is not greater than B/4 (B = " + std::to_string(inst.B) + ")");
      }
      if (2 * a >= inst.B) {
        throw InstanceError("upper", std::to_string(a) + " is not less than B/2 (B = " + std::to_string(inst.B) + ")");
      }
    }
    // 3n distinct positive integers always reach 3n; kept as a guard on the
    // construction's |Y| = m - 3n.
    if (xs.back() < xs.size()) throw InstanceError("room", "max element is below 3n");
    inst.X = std::move(xs);
    return inst;
  }
};

// Backtracking: the smallest unused element goes with every feasible pair.
inline std::optional<Partition> solve_distinct_3partition(const ThreePartitionInstance& inst) {
  const auto& x = inst.X;
  std::vector<char> used(x.size(), 0);
  Partition out;
  auto rec = [&](auto&& self) -> bool {
    std::size_t a = 0;
    while (a < x.size() && used[a]) ++a;
    if (a == x.size()) return true;
    used[a] = 1;
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (used[b]) continue;
      for (std::size_t c = b + 1; c < x.size(); ++c) {
        if (used[c] || x[a] + x[b] + x[c] != inst.B) continue;
        used[b] = used[c] = 1;
        out.push_back({x[a], x[b], x[c]});
        if (self(self)) return true;
        out.pop_back();
        used[b] = used[c] = 0;
      }
    }
    used[a] = 0;
    return false;
  };
  if (rec(rec)) return out;
  return std::nullopt;
}

enum class SegmentKind { s, s_prime, q };

inline std::string segment_name(SegmentKind k, std::size_t index) {
  switch (k) {
    case SegmentKind::s: return "S" + std::to_string(index);
    case SegmentKind::s_prime: return "S'" + std::to_string(index);
    case SegmentKind::q: return "Q" + std::to_string(index);
  }
  return "?";
}

// A run of consecutive spine vertices; index is 1-based within its kind.
struct Segment {
  SegmentKind kind = SegmentKind::s;
  std::size_t index = 0;
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t centre() const { return start + (length - 1) / 2; }
};

struct GadgetMetadata {
  std::uint64_t m = 0;
  std::size_t n = 0;
  std::uint64_t B = 0;
  std::uint64_t B_prime = 0;
  std::vector<std::uint64_t> X_prime;  // 2a - 1, ascending
  std::vector<std::uint64_t> Y;        // odd numbers below 2m missing from X', descending
  std::size_t spine_length = 0;        // spine ids are 0..spine_length-1
  std::vector<Segment> segments;       // spine order
  std::vector<Vertex> q_centers;       // q_centers[i-1] = middle of Q_i
  std::vector<std::vector<Vertex>> spikes;  // spikes[i-1] = spike ids of Q_i, left to right
  std::vector<std::size_t> spike_after;     // per spike id - spine_length: left spine neighbour
  IntervalModel interval_model;

  const Segment& q(std::size_t i) const {
    for (const auto& s : segments)
      if (s.kind == SegmentKind::q && s.index == i) return s;
    throw std::out_of_range("no segment Q" + std::to_string(i));
  }
};

struct Gadget {
  Graph graph;
  GadgetMetadata meta;
};

// Spine S_1 Q_1 ... S_n Q_n S'_1 Q_{n+1} ... S'_k Q_{n+k} Q_{n+k+1} ... Q_{m+1}
// with |S_i| = B', |S'_j| = y_j, |Q_l| = 2(2m+1-l)+1, and a degree-2 spike on
// every pair of consecutive vertices inside each Q_l.
inline Gadget build_gadget(const ThreePartitionInstance& inst) {
  GadgetMetadata meta;
  meta.m = inst.m();
  meta.n = inst.n;
  meta.B = inst.B;
  meta.B_prime = 2 * inst.B - 3;
  for (auto a : inst.X) meta.X_prime.push_back(2 * a - 1);
  const std::set<std::uint64_t> xp(meta.X_prime.begin(), meta.X_prime.end());
  for (std::uint64_t z = 2 * meta.m - 1;; z -= 2) {
    if (!xp.count(z)) meta.Y.push_back(z);
    if (z == 1) break;
  }

  const std::size_t m = meta.m;
  std::size_t pos = 0;
  auto add = [&](SegmentKind kind, std::size_t index, std::size_t len) {
    meta.segments.push_back({kind, index, pos, len});
    pos += len;
  };
  auto q_len = [&](std::size_t l) { return 2 * (2 * m + 1 - l) + 1; };
  std::size_t l = 1;
  for (std::size_t i = 1; i <= inst.n; ++i, ++l) {
    add(SegmentKind::s, i, meta.B_prime);
    add(SegmentKind::q, l, q_len(l));
  }
  for (std::size_t j = 1; j <= meta.Y.size(); ++j, ++l) {
    add(SegmentKind::s_prime, j, meta.Y[j - 1]);
    add(SegmentKind::q, l, q_len(l));
  }
  for (; l <= m + 1; ++l) add(SegmentKind::q, l, q_len(l));
  meta.spine_length = pos;

  std::vector<std::string> labels(pos);
  meta.q_centers.assign(m + 1, 0);
  meta.spikes.assign(m + 1, {});
  std::vector<std::string> spike_labels;
  for (const auto& seg : meta.segments) {
    for (std::size_t v = seg.start; v < seg.start + seg.length; ++v) labels[v] = segment_name(seg.kind, seg.index);
    if (seg.kind != SegmentKind::q) continue;
    meta.q_centers[seg.index - 1] = static_cast<Vertex>(seg.centre());
    for (std::size_t x = 0; x + 1 < seg.length; ++x) {
      meta.spikes[seg.index - 1].push_back(static_cast<Vertex>(pos + meta.spike_after.size()));
      meta.spike_after.push_back(seg.start + x);
      spike_labels.push_back("q" + std::to_string(seg.index) + "." + std::to_string(x + 1));
    }
  }
  labels.insert(labels.end(), spike_labels.begin(), spike_labels.end());

  Gadget out;
  out.graph = gen::spiked_path(pos, meta.spike_after, std::move(labels));
  meta.interval_model = spiked_path_interval_model(pos, meta.spike_after);
  out.meta = std::move(meta);
  return out;
}

// Source i sits at the middle of the i-th largest segment once every S_i is
// cut into runs of 2a-1 for its triple; all 2m+1 runs have distinct odd sizes.
inline BurningSequence certificate_sequence(const ThreePartitionInstance& inst, const Partition& partition,
                                            const GadgetMetadata& meta) {
  if (partition.size() != inst.n) throw GraphError("certificate_sequence: partition needs n triples");
  std::vector<std::uint64_t> flat;
  for (const auto& t : partition) {
    if (t[0] + t[1] + t[2] != inst.B) throw GraphError("certificate_sequence: a triple does not sum to B");
    flat.insert(flat.end(), t.begin(), t.end());
  }
  std::sort(flat.begin(), flat.end());
  if (flat != inst.X) throw GraphError("certificate_sequence: partition does not use X exactly once");

  std::vector<Segment> runs;
  for (const auto& seg : meta.segments) {
    if (seg.kind != SegmentKind::s) {
      runs.push_back(seg);
      continue;
    }
    std::size_t start = seg.start;
    for (auto a : partition[seg.index - 1]) {
      runs.push_back({seg.kind, seg.index, start, 2 * a - 1});
      start += 2 * a - 1;
    }
  }
  std::stable_sort(runs.begin(), runs.end(), [](const Segment& a, const Segment& b) { return a.length > b.length; });
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].length == runs[i - 1].length) {
      throw std::logic_error("certificate_sequence: two runs of size " + std::to_string(runs[i].length));
    }
  }
  BurningSequence seq;
  seq.horizon = 2 * meta.m + 1;
  if (runs.size() != seq.horizon) throw std::logic_error("certificate_sequence: expected 2m+1 runs");
  for (const auto& r : runs) seq.sources.push_back(static_cast<Vertex>(r.centre()));
  return seq;
}

struct StructureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GadgetReport {
  std::vector<StructureCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const StructureCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline GadgetReport verify_gadget_structure(const Graph& g, const GadgetMetadata& meta) {
  GadgetReport rep;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const std::size_t L = meta.spine_length;
  const std::size_t m = meta.m;
  const std::size_t side = 2 * m + 1;

  check("spine_length", L == side * side,
        std::to_string(L) + " spine vertices, expected " + std::to_string(side * side));

  std::size_t spikes = 0;
  for (std::size_t l = 1; l <= m + 1; ++l) spikes += 2 * (2 * m + 1 - l);
  check("vertex_count", g.order() == L + spikes && meta.spike_after.size() == spikes,
        std::to_string(g.order()) + " vertices, expected " + std::to_string(L + spikes));

  {
    bool ok = L <= g.order();
    std::string why;
    for (Vertex v = 0; ok && v < L; ++v) {
      std::size_t spine_nb = 0;
      for (Vertex w : g.neighbors(v)) {
        if (w >= L) continue;
        ++spine_nb;
        if (w + 1 != v && v + 1 != w) {
          ok = false;
          why = "chord " + std::to_string(v) + "-" + std::to_string(w);
        }
      }
      const std::size_t want = (v == 0 || v + 1 == L) ? (L > 1 ? 1 : 0) : 2;
      if (ok && spine_nb != want) {
        ok = false;
        why = "spine vertex " + std::to_string(v) + " has " + std::to_string(spine_nb) + " spine neighbours";
      }
    }
    check("spine_induced_path", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; ok && i < meta.spike_after.size(); ++i) {
      const auto q = static_cast<Vertex>(L + i);
      if (q >= g.order()) {
        ok = false;
        why = "spike " + std::to_string(q) + " missing";
        break;
      }
      const auto x = static_cast<Vertex>(meta.spike_after[i]);
      auto nb = g.neighbors(q);
      if (nb.size() != 2 || nb[0] != x || nb[1] != x + 1) {
        ok = false;
        why = "spike " + std::to_string(q) + " is not attached to exactly " + std::to_string(x) + " and " +
              std::to_string(x + 1);
      }
    }
    check("spikes_on_consecutive_pairs", ok, why);
  }

  {
    bool ok = true;
    std::string why;
    std::size_t expect = 0;
    std::vector<std::size_t> q_seen;
    for (const auto& seg : meta.segments) {
      if (seg.start != expect) {
        ok = false;
        why = segment_name(seg.kind, seg.index) + " does not start where the previous one ends";
      }
      expect = seg.start + seg.length;
      std::size_t want = 0;
      if (seg.kind == SegmentKind::s) want = meta.B_prime;
      if (seg.kind == SegmentKind::s_prime) want = meta.Y.at(seg.index - 1);
      if (seg.kind == SegmentKind::q) {
        want = 2 * (2 * m + 1 - seg.index) + 1;
        q_seen.push_back(seg.index);
      }
      if (seg.length != want) {
        ok = false;
        why = segment_name(seg.kind, seg.index) + " has length " + std::to_string(seg.length) + ", expected " +
              std::to_string(want);
      }
    }
    std::vector<std::size_t> q_all(m + 1);
    std::iota(q_all.begin(), q_all.end(), std::size_t{1});
    if (q_seen != q_all) {
      ok = false;
      why = "Q segments out of order";
    }
    if (expect != L) {
      ok = false;
      why = "segments do not cover the spine";
    }
    if (meta.Y.size() + 3 * meta.n != m) {
      ok = false;
      why = "|Y| != m - 3n";
    }
    check("segment_layout", ok, why);
  }

  {
    const auto verdict = verify_interval_model(g, meta.interval_model, true);
    check("proper_interval_model", verdict.valid, verdict.reason);
  }
  check("claw_free", is_claw_free(g));
  check("connected", is_connected(g));

  // A single source at r_i with radius 2m+1-i burns Q_i and its spikes,
  // measured inside the spiked segment alone.
  {
    bool ok = meta.q_centers.size() == m + 1 && meta.spikes.size() == m + 1;
    std::string why;
    for (std::size_t i = 1; ok && i <= m + 1; ++i) {
      const Segment& seg = meta.q(i);
      std::vector<Vertex> part;
      for (std::size_t v = seg.start; v < seg.start + seg.length; ++v) part.push_back(static_cast<Vertex>(v));
      part.insert(part.end(), meta.spikes[i - 1].begin(), meta.spikes[i - 1].end());
      const Graph sub = induced_subgraph(g, part);
      const auto local_centre = static_cast<Vertex>(meta.q_centers[i - 1] - seg.start);
      const auto dist = bfs_distances(sub, local_centre);
      const std::size_t radius = 2 * m + 1 - i;
      for (std::size_t j = 0; j < part.size(); ++j) {
        if (dist[j] == kUnreachable || dist[j] > radius) {
          ok = false;
          why = "vertex " + std::to_string(part[j]) + " of Q" + std::to_string(i) + " lies beyond radius " +
                std::to_string(radius) + " of its centre";
          break;
        }
      }
    }
    check("q_centre_burns_spiked_segment", ok, why);
  }
  return rep;
}

// Caterpillar T with L(T) = G_p: a path w_0..w_L whose edge (w_i, w_{i+1})
// stands for spine vertex i, plus a leaf at w_{x+1} for the spike on (x, x+1).
struct CaterpillarPreimage {
  Graph tree;
  // line_to_gadget[e] = gadget vertex for tree edge e (index into tree.edges()).
  std::vector<Vertex> line_to_gadget;
  bool verified = false;
};

inline CaterpillarPreimage caterpillar_preimage(const Graph& g, const GadgetMetadata& meta) {
  const std::size_t L = meta.spine_length;
  const std::size_t spikes = meta.spike_after.size();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < L; ++i) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  for (std::size_t j = 0; j < spikes; ++j) {
    pairs.emplace_back(static_cast<Vertex>(meta.spike_after[j] + 1), static_cast<Vertex>(L + 1 + j));
  }
  CaterpillarPreimage out;
  out.tree = build_graph(L + 1 + spikes, pairs);
  out.line_to_gadget.assign(out.tree.size(), 0);
  for (std::size_t i = 0; i < L; ++i) {
    out.line_to_gadget[out.tree.edge_index(static_cast<Vertex>(i), static_cast<Vertex>(i + 1))] =
        static_cast<Vertex>(i);
  }
  for (std::size_t j = 0; j < spikes; ++j) {
    out.line_to_gadget[out.tree.edge_index(static_cast<Vertex>(meta.spike_after[j] + 1),
                                           static_cast<Vertex>(L + 1 + j))] = static_cast<Vertex>(L + j);
  }
  const DerivedGraph lt = line_graph(out.tree);
  out.verified = is_tree(out.tree) && is_isomorphism(lt.graph, g, out.line_to_gadget);
  return out;
}

}  // namespace burnlab
