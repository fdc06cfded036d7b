// Copyright 2026 The mixext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mixext/canon.hpp"
#include "mixext/graph.hpp"
#include "mixext/graph6.hpp"
#include "support/oracles.hpp"

using namespace mixext;

TEST(MixedExtension, AllSingletonsGivePath) {
  const Graph g = build_mixed_extension(3, SignedTuple{1, 1, 1});
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(MixedExtension, SmallPineapple) {
  const Graph g = build_mixed_extension(3, SignedTuple{2, 1, -2});
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edge_count(), 5u);
  // layout: {0,1} clique, 2 = v, {3,4} coclique
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(g.degree(2), 4u);
  EXPECT_EQ(g.degree(3), 1u);
  EXPECT_FALSE(g.adjacent(3, 4));
  EXPECT_EQ(triangle_count(g), 1u);
}

TEST(MixedExtension, LargerPineappleEdgeCount) {
  const Graph g = build_mixed_extension(3, SignedTuple{3, 1, -4});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.edge_count(), oracle::mixed_extension_edges({3, 1, -4}));
  EXPECT_EQ(g.edge_count(), 10u);
}

TEST(MixedExtension, EdgeCountMatchesSummation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 5), len(2, 5), sign(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> t(static_cast<std::size_t>(len(rng)));
    for (auto& v : t) v = size(rng) * (sign(rng) ? 1 : -1);
    const Graph g = build_mixed_extension(SignedTuple(t));
    EXPECT_EQ(g.edge_count(), oracle::mixed_extension_edges(t));
  }
}

TEST(MixedExtension, ReversalIsIsomorphic) {
  for (const auto& t : {SignedTuple{-2, 3, 1}, SignedTuple{1, -2, 4}, SignedTuple{2, -1, 3, -2}}) {
    EXPECT_TRUE(oracle::isomorphic_by_permutation(build_mixed_extension(t), build_mixed_extension(t.reversed())))
        << t.to_string();
  }
}

TEST(MixedExtension, UnitSignIsIrrelevant) {
  EXPECT_EQ(build_mixed_extension(SignedTuple{-1, 3, 2}), build_mixed_extension(SignedTuple{1, 3, 2}));
  EXPECT_EQ(build_mixed_extension(SignedTuple{2, -1, -3}), build_mixed_extension(SignedTuple{2, 1, -3}));
}

TEST(MixedExtension, RejectsZeroAndLengthMismatch) {
  EXPECT_THROW(SignedTuple({1, 0, 2}), InvalidDescriptor);
  EXPECT_THROW(build_mixed_extension(4, SignedTuple{1, 2, 3}), InvalidDescriptor);
  EXPECT_THROW(build_mixed_extension(1, SignedTuple{1}), InvalidDescriptor);
}

TEST(NamedGraphs, Counts) {
  const Graph diamond = complete_split(2, 2);
  EXPECT_EQ(diamond.order(), 4u);
  EXPECT_EQ(diamond.edge_count(), 5u);
  const Graph k28 = complete_bipartite(2, 8);
  EXPECT_EQ(k28.order(), 10u);
  EXPECT_EQ(k28.edge_count(), 16u);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
}

TEST(NamedGraphs, PineappleMatchesMixedExtension) {
  EXPECT_EQ(pineapple(4, 4), build_mixed_extension(3, SignedTuple{3, 1, -4}));
  EXPECT_EQ(named_graph(NamedKind::kPineapple, 4, 4), pineapple(4, 4));
}

TEST(NamedGraphs, RejectNonpositive) {
  EXPECT_THROW(complete_graph(0), InvalidDescriptor);
  EXPECT_THROW(complete_bipartite(2, -1), InvalidDescriptor);
  EXPECT_THROW(pineapple(1, 2), InvalidDescriptor);
}

TEST(Union, CountsAndIdentity) {
  const Graph u = disjoint_union(complete_graph(3), complete_graph(2));
  EXPECT_EQ(u.order(), 5u);
  EXPECT_EQ(u.edge_count(), 4u);
  EXPECT_EQ(component_count(u), 2u);
  const Graph g = pineapple(3, 2);
  EXPECT_EQ(disjoint_union(g, empty_graph(0)), g);
  const Graph m = add_isolated(complete_bipartite(4, 4), 2);
  EXPECT_EQ(m.order(), 10u);
  EXPECT_EQ(m.edge_count(), 16u);
  EXPECT_EQ(isolated_count(m), 2u);
}

TEST(Union, CommutativeAndAssociativeUpToIsomorphism) {
  const Graph a = complete_graph(3), b = pineapple(3, 2), c = complete_bipartite(1, 3);
  EXPECT_EQ(canonical_form(disjoint_union(a, b)), canonical_form(disjoint_union(b, a)));
  EXPECT_EQ(canonical_form(disjoint_union(disjoint_union(a, b), c)),
            canonical_form(disjoint_union(a, disjoint_union(b, c))));
}

TEST(Union, AddIsolated) {
  EXPECT_EQ(add_isolated(complete_graph(1), 0), complete_graph(1));
  EXPECT_EQ(add_isolated(build_mixed_extension(SignedTuple{2, -2, 2}), 2).order(), 8u);
  const Graph c4k1 = add_isolated(complete_bipartite(2, 2), 1);
  EXPECT_EQ(c4k1.order(), 5u);
  EXPECT_EQ(remove_isolated(c4k1), complete_bipartite(2, 2));
}

TEST(Capacity, HardLimit) {
  EXPECT_THROW((void)GraphBuilder(kHardMaxOrder + 1), CapacityError);
  EXPECT_NO_THROW((void)GraphBuilder(kHardMaxOrder));
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(build_mixed_extension(SignedTuple{1, 1, 1})), "Bg");
  const Graph petersen =
      graph_from_edges(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                            {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  EXPECT_EQ(to_graph6(petersen), "IheA@GUAo");
  EXPECT_EQ(to_graph6(complete_graph(70)).substr(0, 8), "~?@E~~~~");
  EXPECT_EQ(to_graph6(empty_graph(0)), "?");
}

TEST(Graph6, RoundTrip) {
  std::mt19937 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 17u, 62u, 63u, 64u, 70u}) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(0.4);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) b.add_edge(i, j);
    const Graph g = b.build();
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
  }
}

TEST(Graph6, RejectsGarbage) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("B"), ParseError);
  EXPECT_THROW(from_graph6("B\x01"), ParseError);
}

TEST(Relabel, PreservesStructure) {
  const Graph g = build_mixed_extension(SignedTuple{-2, 3, 2});
  const std::vector<std::size_t> perm{6, 5, 4, 3, 2, 1, 0};
  const Graph h = relabel(g, perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  EXPECT_EQ(h.degree_sequence(), g.degree_sequence());
  EXPECT_TRUE(oracle::isomorphic_by_permutation(g, h));
}
