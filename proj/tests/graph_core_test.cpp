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

TEST(BuildGraph, NormalizesAndRejects) {
  EXPECT_EQ(build_graph(1, {}).order(), 1u);
  const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(p4.size(), 3u);
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(c4.size(), 4u);
  EXPECT_TRUE(c4.adjacent(0, 3));

  const Graph dup = build_graph(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(dup.size(), 2u);
  EXPECT_EQ(dup.edges()[0], (Edge{0, 1}));

  EXPECT_THROW(build_graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(build_graph(3, {{2, 2}}), GraphError);
  try {
    build_graph(3, {{1, 1}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
}

TEST(Distances, SmallCases) {
  EXPECT_EQ(all_pairs_distances(gen::path(4))(0, 3), 3u);
  EXPECT_EQ(all_pairs_distances(gen::cycle(6))(0, 3), 3u);
  const Graph two = build_graph(4, {{0, 1}, {2, 3}});
  const auto d = all_pairs_distances(two);
  EXPECT_EQ(d(0, 2), kUnreachable);
  EXPECT_FALSE(d.reachable(1, 3));
  EXPECT_EQ(diameter(gen::path(9)), 8u);
  EXPECT_EQ(diameter(gen::complete(5)), 1u);
  EXPECT_EQ(diameter(gen::cycle(7)), 3u);
  EXPECT_THROW(diameter(two), GraphError);
}

TEST(Distances, MatchFloydWarshallOnCorpus) {
  for (const Graph& g : bt::connected_corpus(11, 60, 1, 20)) {
    const auto d = all_pairs_distances(g);
    const auto ref = bt::floyd_warshall(g);
    for (Vertex a = 0; a < g.order(); ++a) {
      ASSERT_EQ(d(a, a), 0u);
      for (Vertex b = 0; b < g.order(); ++b) {
        ASSERT_EQ(d(a, b), ref[a][b]);
        ASSERT_EQ(d(a, b), d(b, a));
        for (Vertex c = 0; c < g.order(); ++c) ASSERT_LE(d(a, c), d(a, b) + d(b, c));
      }
    }
  }
}

TEST(LineGraph, KnownShapes) {
  const auto lp = line_graph(gen::path(4));
  EXPECT_EQ(lp.graph.order(), 3u);
  EXPECT_TRUE(path_order(lp.graph).has_value());

  const auto lc = line_graph(gen::cycle(5));
  EXPECT_EQ(lc.graph.order(), 5u);
  EXPECT_EQ(lc.graph.size(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(lc.graph.degree(v), 2u);
  EXPECT_TRUE(is_connected(lc.graph));

  // every pair of the claw's edges shares the centre
  const auto lk = line_graph(gen::star(3));
  EXPECT_EQ(lk.graph, gen::complete(3));

  EXPECT_THROW(line_graph(build_graph(3, {})), GraphError);
  for (Vertex v = 0; v < lk.graph.order(); ++v) EXPECT_EQ(lk.map[v].kind, OriginKind::edge);
}

TEST(TotalGraph, KnownShapes) {
  EXPECT_EQ(total_graph(gen::path(1)).graph.order(), 1u);
  EXPECT_EQ(total_graph(gen::path(2)).graph, gen::complete(3));

  // T(C_4): the 4 edge vertices form a 4-cycle, each incident to two vertices
  const auto tc = total_graph(gen::cycle(4));
  EXPECT_EQ(tc.graph.order(), 8u);
  EXPECT_EQ(tc.graph.size(), 4u + 4u + 8u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(tc.graph.degree(v), 4u);
  const Graph c4 = gen::cycle(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Edge& e = c4.edges()[i];
    EXPECT_TRUE(tc.graph.adjacent(static_cast<Vertex>(4 + i), e.u));
    EXPECT_TRUE(tc.graph.adjacent(static_cast<Vertex>(4 + i), e.v));
  }
  EXPECT_TRUE(tc.map.is_bijection(8));
}

TEST(TotalGraph, RestrictionsRecoverGraphAndLineGraph) {
  for (const Graph& g : bt::connected_corpus(12, 40, 2, 10)) {
    const auto t = total_graph(g);
    std::vector<Vertex> vs, es;
    for (Vertex v = 0; v < t.graph.order(); ++v) (t.map[v].kind == OriginKind::vertex ? vs : es).push_back(v);
    EXPECT_EQ(induced_subgraph(t.graph, vs), g);
    if (g.size() > 0) {
      const Graph le = induced_subgraph(t.graph, es);
      EXPECT_EQ(le.edges(), line_graph(g).graph.edges());
    }
  }
}

TEST(SpikeGraph, KnownShapes) {
  EXPECT_EQ(spike_graph(gen::path(1)).graph, gen::path(2));
  const auto sc = spike_graph(gen::cycle(4));
  EXPECT_EQ(sc.graph.order(), 8u);
  EXPECT_EQ(sc.graph.size(), 8u);
  const Graph t = gen::star(4);
  EXPECT_EQ(max_degree(spike_graph(t).graph), max_degree(t) + 1);
  for (Vertex v = 4; v < 8; ++v) EXPECT_EQ(sc.map[v].kind, OriginKind::leaf);
}

TEST(Transforms, VertexCounts) {
  for (const Graph& g : bt::connected_corpus(13, 50, 1, 12)) {
    if (g.size() > 0) {
      EXPECT_EQ(line_graph(g).graph.order(), g.size());
    }
    EXPECT_EQ(total_graph(g).graph.order(), g.order() + g.size());
    EXPECT_EQ(spike_graph(g).graph.order(), 2 * g.order());
  }
}

TEST(Generators, Families) {
  const Graph s3 = gen::spider(3);
  EXPECT_EQ(s3.order(), 7u);
  EXPECT_EQ(s3.degree(0), 3u);
  EXPECT_EQ(gen::spider(4).order(), 13u);
  EXPECT_THROW(gen::spider(1), GraphError);

  const Graph gt = gen::gtilde();
  EXPECT_EQ(gt.order(), 16u);
  EXPECT_EQ(gt.size(), 24u);

  const Graph t = gen::random_tree(10, 5);
  EXPECT_TRUE(is_connected(t));
  EXPECT_EQ(t.size(), 9u);
  EXPECT_EQ(gen::random_tree(10, 5), t);

  EXPECT_EQ(generate("path:n=25"), gen::path(25));
  EXPECT_EQ(generate("bipartite:a=2,b=3").size(), 6u);
  EXPECT_THROW(generate("nosuch"), GraphError);
  EXPECT_THROW(generate("path:n=x"), GraphError);
  EXPECT_THROW(generate("path"), GraphError);
}

TEST(InducedPath, KnownValues) {
  EXPECT_EQ(longest_induced_path(gen::cycle(5)), 4u);
  EXPECT_EQ(bt::brute_longest_induced_path(gen::cycle(5)), 4u);
  EXPECT_EQ(longest_induced_path(gen::gtilde()), 5u);
  EXPECT_TRUE(is_pk_free(gen::gtilde(), 6));
  EXPECT_FALSE(is_pk_free(gen::gtilde(), 5));
  for (std::size_t r = 3; r <= 4; ++r) {
    EXPECT_EQ(bt::brute_longest_induced_path(gen::spider(r)), 2 * r - 1);
    EXPECT_EQ(longest_induced_path(gen::spider(r)), 2 * r - 1);
  }
  EXPECT_EQ(longest_induced_path(gen::path(10), 4), 4u);
}

TEST(InducedPath, MatchesSubsetEnumeration) {
  for (const Graph& g : bt::connected_corpus(14, 80, 1, 10)) {
    EXPECT_EQ(longest_induced_path(g), bt::brute_longest_induced_path(g));
    if (auto p = find_induced_path(g, longest_induced_path(g))) {
      std::uint32_t mask = 0;
      for (Vertex v : *p) mask |= 1U << v;
      EXPECT_TRUE(bt::mask_induces_path(g, mask));
    }
  }
}

TEST(IntervalModel, Verification) {
  const Graph p3 = gen::path(3);
  EXPECT_TRUE(verify_interval_model(p3, {{{0, 1}, {1, 2}, {2, 3}}}, true));

  // the claw has no proper model on small coordinates
  const Graph claw = gen::star(3);
  std::vector<Interval> all;
  for (std::int64_t lo = 0; lo <= 5; ++lo)
    for (std::int64_t hi = lo; hi <= 5; ++hi) all.push_back({lo, hi});
  std::size_t proper = 0, any = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        for (const auto& d : all) {
          IntervalModel m{{a, b, c, d}};
          if (verify_interval_model(claw, m, false)) ++any;
          if (verify_interval_model(claw, m, true)) ++proper;
        }
  EXPECT_EQ(proper, 0u);
  EXPECT_GT(any, 0u);

  EXPECT_THROW(verify_interval_model(p3, {{{0, 1}}}, false), GraphError);
  const auto bad = verify_interval_model(p3, {{{0, 1}, {3, 4}, {2, 3}}}, false);
  EXPECT_FALSE(bad.valid);
  EXPECT_FALSE(bad.reason.empty());
}

TEST(IntervalModel, SpikedPathModelIsProper) {
  const std::vector<std::size_t> spikes{0, 1, 2, 5, 6};
  const Graph g = gen::spiked_path(8, spikes);
  EXPECT_TRUE(verify_interval_model(g, spiked_path_interval_model(8, spikes), true));
  EXPECT_TRUE(is_claw_free(g));
}

TEST(IntervalModel, CaterpillarModel) {
  const std::vector<std::size_t> leaves{0, 2, 1, 0, 3};
  const Graph g = gen::caterpillar(5, leaves);
  EXPECT_TRUE(is_tree(g));
  EXPECT_TRUE(verify_interval_model(g, gen::caterpillar_interval_model(5, leaves), false));
}
