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

// Seeded corpus properties that cut across modules.

#include <gtest/gtest.h>

#include <random>

#include "burnlab/burnlab.hpp"
#include "support.hpp"

using namespace burnlab;
namespace bt = burnlab::testing;

TEST(Property, BoundsSandwichExact) {
  for (const Graph& g : bt::connected_corpus(61, 120, 1, 16)) {
    const auto b = bounds(g);
    const auto e = burning_number_exact(g).value();
    EXPECT_LE(b.lower, e);
    EXPECT_GE(b.upper, e);
  }
}

TEST(Property, AppendedSourceKeepsWitnessValid) {
  std::mt19937_64 rng(62);
  for (const Graph& g : bt::connected_corpus(62, 60, 1, 12)) {
    BurningSequence w = *burning_number_exact(g).witness;
    w.sources.push_back(static_cast<Vertex>(rng() % g.order()));
    ++w.horizon;
    // the appended source is legal only if still unburned; validity must not
    // depend on whether it was
    const auto v = validate(g, w);
    EXPECT_TRUE(v.covering);
    EXPECT_TRUE(v.routes_agree);
    std::vector<std::optional<Vertex>> slots(w.sources.begin(), w.sources.end());
    EXPECT_TRUE(validate(g, complete_sequence(g, std::span<const std::optional<Vertex>>(slots), w.horizon)));
  }
}

TEST(Property, AdversarialSequencesAgreeAcrossRoutes) {
  std::mt19937_64 rng(63);
  for (const Graph& g : bt::connected_corpus(63, 60, 2, 10)) {
    const auto w = *burning_number_exact(g).witness;
    for (int rep = 0; rep < 20; ++rep) {
      BurningSequence b = w;
      switch (rng() % 3) {
        case 0:  // repeat an earlier source
          if (b.sources.size() >= 2) b.sources.back() = b.sources.front();
          break;
        case 1:  // swap two sources
          if (b.sources.size() >= 2) std::swap(b.sources[0], b.sources[b.sources.size() - 1]);
          break;
        default:  // shrink the horizon
          if (b.horizon > 1) --b.horizon;
          if (b.sources.size() > b.horizon) b.sources.pop_back();
      }
      EXPECT_TRUE(validate(g, b).routes_agree) << format_sequence(b);
    }
  }
}

TEST(Property, PkfreeOverAllApplicableK) {
  for (const Graph& g : bt::connected_corpus(64, 60, 2, 14)) {
    const std::size_t lip = longest_induced_path(g);
    for (std::size_t k = 4; k <= 2 * ceil_sqrt(g.order()); ++k) {
      if (k <= lip) continue;
      const auto s = pkfree_sequence(g, k);
      EXPECT_TRUE(validate(g, s));
      EXPECT_LE(s.length(), (k + 2) / 2);
      const auto cds = minimum_connected_dominating_set(g, k);
      const Graph inner = induced_subgraph(g, cds.vertices);
      if (cds.kind == CdsKind::iso_pk2) {
        // a path: connected, two ends of degree one (or a single vertex / edge)
        std::size_t ones = 0;
        for (Vertex v = 0; v < inner.order(); ++v) ones += inner.degree(v) <= 1;
        EXPECT_TRUE(is_connected(inner));
        EXPECT_LE(max_degree(inner), 2u);
        EXPECT_EQ(longest_induced_path(inner), inner.order());
        EXPECT_GE(ones, std::min<std::size_t>(2, inner.order()));
      } else {
        EXPECT_TRUE(is_pk_free(inner, k - 2));
      }
    }
  }
}

TEST(Property, TreesHaveSmallLineBurning) {
  for (const Graph& t : bt::tree_corpus(65, 40, 2, 14)) {
    if (t.size() == 0) continue;
    EXPECT_LE(edge_burning_number(t).value(), burning_number_exact(t).value());
  }
}

TEST(Property, GeneratorsAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(gen::random_tree(12, seed), gen::random_tree(12, seed));
    const std::string spec = "random_connected:n=12,p=0.3,seed=" + std::to_string(seed);
    EXPECT_EQ(generate(spec), generate(spec));
  }
}
