// Copyright 2026 The hamlab Authors
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

#include "hamlab/digraph.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

TEST(VertexSetTest, MembersAndSetAlgebra) {
  VertexSet a = VertexSet::Of(130, {0, 5, 64, 129});
  VertexSet b = VertexSet::Of(130, {5, 64, 100});
  EXPECT_EQ(a.Size(), 4);
  EXPECT_EQ((a & b).Members(), (std::vector<int>{5, 64}));
  EXPECT_EQ((a | b).Size(), 5);
  EXPECT_EQ((a - b).Members(), (std::vector<int>{0, 129}));
  EXPECT_EQ(a.CountCommon(b), 2);
  EXPECT_EQ(a.First(), 0);
  EXPECT_TRUE(VertexSet(3).Empty());
  EXPECT_EQ(VertexSet(3).First(), -1);
  EXPECT_TRUE(VertexSet::Of(130, {5}).IsSubsetOf(a));
}

TEST(DigraphTest, RejectsInvalidEdges) {
  EXPECT_THROW(Digraph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Digraph(3, {{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(Digraph(3, {{1, 1}}), InputError);
  Digraph loops(3, {{1, 1}}, true);
  EXPECT_TRUE(loops.HasLoops());
  EXPECT_FALSE(loops.WithoutLoops().HasLoops());
}

TEST(DigraphTest, AdjacencyIsSymmetricBetweenInAndOut) {
  Digraph g = RandomRegular(15, 4, false, 3);
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.Out(u)) {
      EXPECT_TRUE(g.InSet(v).Contains(u));
      EXPECT_TRUE(g.HasEdge(u, v));
    }
  }
  EXPECT_EQ(g.EdgeCount(), 60);
}

TEST(DigraphTest, TransposeIsAnInvolution) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = RandomRegular(12, 3, seed % 2 == 0, seed);
    EXPECT_EQ(g.Transposed().Transposed(), g);
    EXPECT_EQ(g.Transposed().Edges().size(), g.Edges().size());
  }
}

TEST(DigraphTest, EdgesSplitAcrossAnyBipartition) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph g = RandomRegular(14, 5, false, trial);
    VertexSet a(14), b(14);
    for (int v = 0; v < 14; ++v) (rng.Coin() ? a : b).Insert(v);
    VertexSet all = VertexSet::Full(14);
    EXPECT_EQ(CountEdgesBetween(g, a, all) + CountEdgesBetween(g, b, all),
              g.EdgeCount());
  }
}

TEST(DigraphTest, InducedSubgraphRenumbers) {
  Digraph g = DirectedCycle(5);
  Digraph h = g.Induced({1, 2, 4});
  EXPECT_EQ(h.n(), 3);
  EXPECT_EQ(h.Edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(DigraphTest, ProfileOfTournament) {
  GraphProfile p = Profile(RotationalTournament(7));
  EXPECT_EQ(p.n, 7);
  EXPECT_EQ(p.regular_degree, 3);
  EXPECT_TRUE(p.oriented);
  EXPECT_EQ(p.edge_count, 21);
  GraphProfile q = Profile(CompleteDigraph(4));
  EXPECT_EQ(q.regular_degree, 3);
  EXPECT_FALSE(q.oriented);
}

TEST(PathSystemTest, RecognizesPathsAndRejectsCycles) {
  Digraph g = DirectedCycle(6);
  EXPECT_TRUE(IsPathSystem(g, {{0, 1}, {1, 2}, {3, 4}}));
  EXPECT_FALSE(IsPathSystem(g, g.Edges()));
  EXPECT_TRUE(HasDirectedCycle(6, g.Edges()));
  EXPECT_FALSE(HasDirectedCycle(6, {{0, 1}, {1, 2}}));
  EXPECT_THROW(IsPathSystem(g, {{0, 2}}), InputError);
  Digraph k = CompleteDigraph(4);
  EXPECT_FALSE(IsPathSystem(k, {{0, 1}, {0, 2}}));
}

TEST(PathSystemTest, DecompositionPartitionsEdges) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 12;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    rng.Shuffle(order);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
      if (rng.Int(0, 2) != 0) edges.push_back({order[i], order[i + 1]});
    }
    Digraph k = CompleteDigraph(n);
    ASSERT_TRUE(IsPathSystem(k, edges));
    std::vector<std::vector<int>> paths = PathDecomposition(edges);
    std::vector<Edge> rebuilt;
    std::vector<int> seen(n, 0);
    for (const auto& path : paths) {
      ASSERT_GE(path.size(), 2u);
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        rebuilt.push_back({path[i], path[i + 1]});
      }
      for (int v : path) ++seen[v];
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(rebuilt, edges);
    for (int v = 0; v < n; ++v) EXPECT_LE(seen[v], 1);
  }
}

TEST(VerifyHamiltonCycleTest, AcceptsOnlySpanningCycles) {
  Digraph c4 = DirectedCycle(4);
  EXPECT_TRUE(VerifyHamiltonCycle(c4, {0, 1, 2, 3}));
  EXPECT_TRUE(VerifyHamiltonCycle(c4, {2, 3, 0, 1}));
  EXPECT_FALSE(VerifyHamiltonCycle(c4, {0, 1, 2}));
  EXPECT_FALSE(VerifyHamiltonCycle(c4, {0, 2, 1, 3}));
  EXPECT_FALSE(VerifyHamiltonCycle(c4, {0, 1, 1, 3}));
  EXPECT_FALSE(VerifyHamiltonCycle(c4, {0, 1, 2, 7}));
}

TEST(VerifyHamiltonCycleTest, BridgedCliquesHaveNoHamiltonCycle) {
  // Every cyclic order of 6 vertices starting at 0 fails.
  Digraph g = BridgedCliques(3).graph;
  std::vector<int> order{1, 2, 3, 4, 5};
  do {
    std::vector<int> cycle{0};
    cycle.insert(cycle.end(), order.begin(), order.end());
    EXPECT_FALSE(VerifyHamiltonCycle(g, cycle));
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace
}  // namespace hamlab
