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

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burnlab/burning.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/interval.hpp"

namespace burnlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

// Whitespace-separated integer fields of a line; '#' starts a comment.
inline std::vector<std::int64_t> int_fields(std::string_view line, std::size_t lineno) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc{} || p != line.data() + j) {
      throw ParseError(lineno, "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

// Next line with at least one field; returns false at end of input.
inline bool next_fields(std::istream& in, std::size_t& lineno, std::vector<std::int64_t>& fields) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    fields = int_fields(line, lineno);
    if (!fields.empty()) return true;
  }
  return false;
}

}  // namespace detail

// "n m" followed by m lines "u v", 0-based. Blank lines and # comments are
// skipped.
inline Graph read_edge_list(std::istream& in) {
  std::size_t lineno = 0;
  std::vector<std::int64_t> f;
  if (!detail::next_fields(in, lineno, f)) throw ParseError(lineno, "missing 'n m' header");
  if (f.size() != 2 || f[0] < 0 || f[1] < 0) throw ParseError(lineno, "header must be two non-negative integers 'n m'");
  const auto n = static_cast<std::size_t>(f[0]);
  const auto m = static_cast<std::size_t>(f[1]);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    if (!detail::next_fields(in, lineno, f)) {
      throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (f.size() != 2) throw ParseError(lineno, "edge line must have exactly two endpoints");
    if (f[0] < 0 || f[1] < 0 || static_cast<std::size_t>(f[0]) >= n || static_cast<std::size_t>(f[1]) >= n) {
      throw ParseError(lineno, "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (f[0] == f[1]) throw ParseError(lineno, "self-loop at " + std::to_string(f[0]));
    edges.emplace_back(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
  }
  if (detail::next_fields(in, lineno, f)) throw ParseError(lineno, "unexpected content after the last edge");
  return build_graph(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G") {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

// "k; b_1 b_2 ... b_t"
inline std::string format_sequence(const BurningSequence& b) {
  std::string s = std::to_string(b.horizon) + ";";
  for (Vertex v : b.sources) s += " " + std::to_string(v);
  return s;
}

inline BurningSequence parse_sequence(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError(1, "sequence must look like 'k; b1 b2 ...'");
  const auto head = detail::int_fields(text.substr(0, semi), 1);
  if (head.size() != 1 || head[0] < 0) throw ParseError(1, "horizon must be one non-negative integer");
  BurningSequence b;
  b.horizon = static_cast<std::size_t>(head[0]);
  for (auto v : detail::int_fields(text.substr(semi + 1), 1)) {
    if (v < 0) throw ParseError(1, "negative vertex id");
    b.sources.push_back(static_cast<Vertex>(v));
  }
  return b;
}

// One "v lo hi" line per vertex, in vertex order.
inline void write_interval_model(std::ostream& out, const IntervalModel& m) {
  for (std::size_t v = 0; v < m.intervals.size(); ++v) {
    out << v << ' ' << m.intervals[v].lo << ' ' << m.intervals[v].hi << '\n';
  }
}

inline IntervalModel read_interval_model(std::istream& in) {
  IntervalModel m;
  std::size_t lineno = 0;
  std::vector<std::int64_t> f;
  while (detail::next_fields(in, lineno, f)) {
    if (f.size() != 3) throw ParseError(lineno, "interval line must be 'v lo hi'");
    if (f[0] != static_cast<std::int64_t>(m.intervals.size())) {
      throw ParseError(lineno, "expected vertex " + std::to_string(m.intervals.size()));
    }
    if (f[1] > f[2]) throw ParseError(lineno, "interval has lo > hi");
    m.intervals.push_back({f[1], f[2]});
  }
  return m;
}

// One integer per line.
inline std::vector<std::uint64_t> read_instance(std::istream& in) {
  std::vector<std::uint64_t> xs;
  std::size_t lineno = 0;
  std::vector<std::int64_t> f;
  while (detail::next_fields(in, lineno, f)) {
    if (f.size() != 1) throw ParseError(lineno, "expected one integer per line");
    if (f[0] <= 0) throw ParseError(lineno, "elements must be positive");
    xs.push_back(static_cast<std::uint64_t>(f[0]));
  }
  return xs;
}

// 64-bit FNV-1a, used as the input digest in reports.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace burnlab
