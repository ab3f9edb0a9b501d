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

#include <gtest/gtest.h>

#include "burnlab/burnlab.hpp"
#include "support.hpp"

using namespace burnlab;
namespace bt = burnlab::testing;

namespace {

const Relation& relation(const RelationReport& r, const std::string& name) {
  for (const auto& x : r.relations)
    if (x.name == name) return x;
  throw std::out_of_range(name);
}

}  // namespace

TEST(EdgeBurning, KnownValues) {
  EXPECT_EQ(edge_burning_number(gen::path(10)).value(), 3u);
  EXPECT_EQ(edge_burning_number(gen::cycle(9)).value(), 3u);
  EXPECT_EQ(edge_burning_number(gen::complete(5)).value(), 3u);
  const auto r = edge_burning_number(gen::star(4));
  EXPECT_EQ(r.value(), 2u);
  EXPECT_EQ(r.origin_map()[0].kind, OriginKind::edge);
  ASSERT_TRUE(r.witness());
  EXPECT_TRUE(validate(line_graph(gen::star(4)).graph, *r.witness()));
}

TEST(TotalBurning, KnownValues) {
  EXPECT_EQ(total_burning_number(gen::path(1)).value(), 1u);
  EXPECT_EQ(total_burning_number(gen::path(2)).value(), 2u);
  EXPECT_EQ(total_burning_number(gen::cycle(4)).value(), 3u);
  EXPECT_EQ(burning_number_oracle(total_graph(gen::cycle(4)).graph), 3u);
  EXPECT_THROW(total_burning_number(build_graph(0, std::vector<std::pair<Vertex, Vertex>>{})), GraphError);
}

TEST(Transforms, LineFromVertex) {
  const Graph p9 = gen::path(9);
  const auto bl = line_seq_from_vertex_seq(p9, path_cycle_sequence(9));
  EXPECT_EQ(bl.horizon, 4u);
  EXPECT_TRUE(validate(line_graph(p9).graph, bl));

  const Graph c5 = gen::cycle(5);
  const auto w = *burning_number_exact(c5).witness;
  EXPECT_TRUE(validate(line_graph(c5).graph, line_seq_from_vertex_seq(c5, w)));

  // L(P_2) is a single vertex, burned at step 1
  EXPECT_EQ(line_seq_from_vertex_seq(gen::path(2), {{0, 1}, 2}), (BurningSequence{{0}, 3}));
  EXPECT_THROW(line_seq_from_vertex_seq(p9, {{0, 1, 2}, 3}), GraphError);
}

TEST(Transforms, VertexFromLine) {
  const Graph p10 = gen::path(10);
  const auto lg = line_graph(p10);
  const auto w = *burning_number_exact(lg.graph).witness;
  const auto b = vertex_seq_from_line_seq(p10, w);
  EXPECT_EQ(b.horizon, w.horizon + 1);
  EXPECT_TRUE(validate(p10, b));

  EXPECT_EQ(vertex_seq_from_line_seq(gen::path(2), {{0}, 1}), (BurningSequence{{0, 1}, 2}));

  const Graph k5 = gen::complete(5);
  const auto wk = *burning_number_exact(line_graph(k5).graph).witness;
  EXPECT_TRUE(validate(k5, vertex_seq_from_line_seq(k5, wk)));

  const Graph isolated = build_graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  EXPECT_THROW(vertex_seq_from_line_seq(isolated, {{0}, 1}), GraphError);
}

TEST(Transforms, TotalRoundTrip) {
  const Graph c4 = gen::cycle(4);
  const auto w = *burning_number_exact(c4).witness;
  const auto a = total_seq_from_vertex_seq(c4, w);
  EXPECT_EQ(a.horizon, w.horizon + 1);
  EXPECT_TRUE(validate(total_graph(c4).graph, a));
  EXPECT_EQ(total_seq_from_vertex_seq(gen::path(1), {{0}, 1}), (BurningSequence{{0}, 2}));

  // T(P_2) = K_3: the edge vertex 2 first, then vertex 0
  EXPECT_EQ(vertex_seq_from_total_seq(gen::path(2), {{2, 0}, 2}), (BurningSequence{{0, 1}, 2}));
  const auto back = vertex_seq_from_total_seq(c4, a);
  EXPECT_EQ(back.horizon, a.horizon);
  EXPECT_TRUE(validate(c4, back));
}

TEST(Transforms, RandomChoicesStayValid) {
  std::uint64_t seed = 100;
  for (const Graph& g : bt::connected_corpus(41, 60, 2, 10)) {
    const auto w = *burning_number_exact(g).witness;
    const auto lg = line_graph(g);
    const auto tg = total_graph(g);
    EXPECT_TRUE(validate(lg.graph, line_seq_from_vertex_seq(g, w, RandomChooser(seed++))));
    const auto a = total_seq_from_vertex_seq(g, w, RandomChooser(seed++));
    EXPECT_TRUE(validate(tg.graph, a));
    EXPECT_TRUE(validate(g, vertex_seq_from_total_seq(g, a, RandomChooser(seed++))));
    const auto wl = *burning_number_exact(lg.graph).witness;
    EXPECT_TRUE(validate(g, vertex_seq_from_line_seq(g, wl, RandomChooser(seed++))));
  }
}

TEST(Relations, SmallGraphs) {
  const auto p5 = verify_relations(gen::path(5));
  EXPECT_TRUE(p5.all_pass());
  EXPECT_EQ(p5.vertex.value(), 3u);
  EXPECT_EQ(p5.edge->value(), 2u);
  EXPECT_EQ(p5.total.value(), 3u);
  EXPECT_EQ(p5.spike_total.value(), 4u);
  EXPECT_EQ(relation(p5, "line_tree").status, RelationStatus::pass);

  const auto k5 = verify_relations(gen::complete(5));
  EXPECT_TRUE(k5.all_pass());
  EXPECT_EQ(k5.edge->value(), 3u);
  EXPECT_EQ(k5.total.value(), 3u);
  EXPECT_THROW(relation(k5, "line_tree"), std::out_of_range);

  const auto c4 = verify_relations(gen::cycle(4));
  EXPECT_TRUE(c4.all_pass());
  EXPECT_EQ(c4.vertex.value(), 2u);
  EXPECT_EQ(c4.spike_total.value(), 3u);

  const auto k1 = verify_relations(gen::path(1));
  EXPECT_FALSE(k1.edge);
  EXPECT_TRUE(k1.all_pass());

  EXPECT_THROW(verify_relations(build_graph(2, std::vector<std::pair<Vertex, Vertex>>{})), GraphError);
}

TEST(Relations, BudgetLimitedNeverFails) {
  SolveBudget tiny;
  tiny.max_nodes = 2;
  for (const Graph& g : bt::connected_corpus(42, 20, 8, 14)) {
    const auto r = verify_relations(g, tiny);
    EXPECT_FALSE(r.any_fail());
  }
  const auto c = verify_relations(gen::cycle(30), tiny);
  EXPECT_FALSE(c.all_pass());
}

TEST(Relations, HoldOnCorpus) {
  for (const Graph& g : bt::connected_corpus(43, 40, 1, 8)) EXPECT_TRUE(verify_relations(g).all_pass());
  for (const Graph& t : bt::tree_corpus(44, 30, 2, 12)) EXPECT_TRUE(verify_relations(t).all_pass());
}
