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

TEST(MinimumCds, SmallGraphs) {
  EXPECT_EQ(minimum_connected_dominating_set(gen::star(5)).vertices, std::vector<Vertex>{0});
  EXPECT_EQ(minimum_connected_dominating_set(gen::path(5)).vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(bt::brute_min_cds_size(gen::path(5)), 3u);
  EXPECT_EQ(minimum_connected_dominating_set(gen::cycle(6)).vertices.size(), 4u);
  EXPECT_EQ(bt::brute_min_cds_size(gen::cycle(6)), 4u);
  EXPECT_EQ(minimum_connected_dominating_set(gen::path(1)).vertices, std::vector<Vertex>{0});
  EXPECT_THROW(minimum_connected_dominating_set(build_graph(2, std::vector<std::pair<Vertex, Vertex>>{})),
               GraphError);
}

TEST(MinimumCds, ClassifiesInnerGraph) {
  // P_7 is P_8-free; its minimum CDS is the inner P_5 = P_{k-2}
  const auto p = minimum_connected_dominating_set(gen::path(7), 7);
  EXPECT_EQ(p.kind, CdsKind::iso_pk2);
  const auto g = minimum_connected_dominating_set(gen::gtilde(), 6);
  EXPECT_EQ(g.kind, CdsKind::pk2_free);
  EXPECT_FALSE(minimum_connected_dominating_set(gen::gtilde()).kind.has_value());
}

TEST(MinimumCds, MinimalAndDichotomyOnCorpus) {
  for (const Graph& g : bt::connected_corpus(31, 80, 1, 12)) {
    const auto cds = minimum_connected_dominating_set(g);
    std::uint32_t mask = 0;
    for (Vertex v : cds.vertices) mask |= 1U << v;
    EXPECT_TRUE(bt::mask_connected_dominating(g, mask));
    EXPECT_EQ(cds.vertices.size(), bt::brute_min_cds_size(g));
    for (std::size_t k = 4; k <= 8; ++k) {
      if (!is_pk_free(g, k)) continue;
      const auto c = minimum_connected_dominating_set(g, k);
      const Graph inner = induced_subgraph(g, c.vertices);
      if (c.kind == CdsKind::iso_pk2) {
        EXPECT_EQ(inner.order(), k - 2);
        EXPECT_EQ(longest_induced_path(inner), k - 2);
      } else {
        EXPECT_LT(bt::brute_longest_induced_path(inner), k - 2);
      }
    }
  }
}

TEST(LiftByDomination, Examples) {
  const Graph star = gen::star(5);
  const std::vector<Vertex> centre{0};
  const auto lifted = lift_by_domination(star, centre, {{0}, 1});
  EXPECT_EQ(lifted, (BurningSequence{{0, 1}, 2}));
  EXPECT_TRUE(validate(star, lifted));

  const Graph p5 = gen::path(5);
  const std::vector<Vertex> d{1, 2, 3};
  const auto inner = *burning_number_exact(induced_subgraph(p5, d)).witness;
  EXPECT_TRUE(validate(p5, lift_by_domination(p5, d, inner)));

  // already burned after the inner horizon: nothing is added
  const Graph p3 = gen::path(3);
  const std::vector<Vertex> all{0, 1, 2};
  const auto early = lift_by_domination(p3, all, {{1, 0}, 2});
  EXPECT_EQ(early, (BurningSequence{{1, 0}, 3}));

  EXPECT_THROW(lift_by_domination(p5, d, {{0, 1}, 2}), GraphError);
  const std::vector<Vertex> not_dominating{0};
  EXPECT_THROW(lift_by_domination(p5, not_dominating, {{0}, 1}), GraphError);
}

TEST(PkfreeSequence, Examples) {
  const Graph gt = gen::gtilde();
  const auto s = pkfree_sequence(gt, 6);
  EXPECT_LE(s.length(), 4u);
  EXPECT_TRUE(validate(gt, s));
  EXPECT_EQ(burning_number_exact(gt).value(), 4u);

  const Graph k5 = gen::complete(5);
  EXPECT_THROW(pkfree_sequence(k5, 2), GraphError);
  const auto sk = pkfree_sequence(k5, 3);
  EXPECT_LE(sk.length(), 2u);
  EXPECT_TRUE(validate(k5, sk));
  EXPECT_EQ(burning_number_oracle(k5), 2u);

  const Graph sp = gen::spider(3);
  const auto ss = pkfree_sequence(sp, 6);
  EXPECT_LE(ss.length(), 4u);
  EXPECT_TRUE(validate(sp, ss));
  EXPECT_EQ(burning_number_oracle(sp), 3u);

  EXPECT_EQ(pkfree_sequence(gen::path(1), 2), (BurningSequence{{0}, 1}));
  EXPECT_THROW(pkfree_sequence(gen::path(10), 5), GraphError);
  EXPECT_THROW(pkfree_sequence(build_graph(2, std::vector<std::pair<Vertex, Vertex>>{}), 4), GraphError);
}

TEST(PkfreeSequence, SpidersAreTight) {
  for (std::size_t r = 2; r <= 4; ++r) {
    const Graph sp = gen::spider(r);
    EXPECT_TRUE(is_pk_free(sp, 2 * r));
    const auto s = pkfree_sequence(sp, 2 * r);
    EXPECT_TRUE(validate(sp, s));
    EXPECT_LE(s.length(), (2 * r + 2) / 2);
    EXPECT_EQ(burning_number_exact(sp).value(), r);
  }
}

TEST(PkfreeSequence, BoundHoldsOnCorpus) {
  for (const Graph& g : bt::connected_corpus(32, 60, 2, 12)) {
    for (std::size_t k = 2; k <= 2 * ceil_sqrt(g.order()); ++k) {
      if (!is_pk_free(g, k)) continue;
      const auto s = pkfree_sequence(g, k);
      EXPECT_TRUE(validate(g, s));
      EXPECT_LE(s.length(), (k + 2) / 2);
    }
  }
}
