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

#include "hamlab/contraction.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "hamlab/balancer.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

int BadCount(const Digraph& g, const Partition& p) {
  return static_cast<int>(BadEdges(g, p).size());
}

TEST(ContractTest, EmptySystemIsIdentity) {
  Digraph g = RotationalTournament(7);
  Partition p(2, {0, 1, 2, 3, 0, 1, 2});
  Contraction c = Contract(g, p, {});
  EXPECT_EQ(c.graph.Edges(), g.Edges());
  EXPECT_EQ(c.partition.labels(), p.labels());
  EXPECT_TRUE(c.record.paths.empty());
  for (int v = 0; v < 7; ++v) EXPECT_EQ(c.record.origin[v], (std::vector<int>{v}));
}

TEST(ContractTest, SingleEdgeLandsInReversedCell) {
  // 0 in V12 and 1 in V21: the path 0 -> 1 goes to (row of 1, column of 0),
  // which is V22.
  Digraph g = DirectedCycle(4);
  Partition p(2, {1, 2, 0, 3});
  Contraction c = Contract(g, p, {{0, 1}});
  EXPECT_EQ(c.graph.n(), 3);
  ASSERT_EQ(c.record.paths.size(), 1u);
  const ContractedPath& path = c.record.paths[0];
  EXPECT_EQ(path.path, (std::vector<int>{0, 1}));
  EXPECT_EQ(path.from_cell, 1);
  EXPECT_EQ(path.to_cell, 3);
  EXPECT_EQ(c.partition.Cell(path.vertex), 3);
  // The new vertex inherits the in-edge 3 -> 0 and the out-edge 1 -> 2.
  int x = path.vertex;
  EXPECT_TRUE(c.graph.HasEdge(x, 0));  // 2 is renumbered to 0
  EXPECT_EQ(c.record.origin[x], (std::vector<int>{0, 1}));
}

TEST(ContractTest, WholeCycleLeavesLoopDropped) {
  Digraph g = DirectedCycle(3);
  Partition p(2, {0, 0, 0});
  Contraction c = Contract(g, p, {{0, 1}, {1, 2}});
  EXPECT_EQ(c.graph.n(), 1);
  EXPECT_EQ(c.record.dropped_loops, 1);
  EXPECT_EQ(c.graph.EdgeCount(), 0);
}

TEST(ContractTest, RejectsNonPathSystems) {
  Digraph g = DirectedCycle(4);
  Partition p(2, {0, 0, 0, 0});
  EXPECT_THROW(Contract(g, p, {{0, 2}}), InputError);
  EXPECT_THROW(Contract(g, p, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), InputError);
  EXPECT_THROW(Contract(g, Partition(2, {0, 0, 0}), {}), InputError);
}

TEST(ContractTest, RandomSystemsKeepRegularityAndBadEdges) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 8 + trial % 20;
    int d = 1 + trial % 4;
    Digraph g = RandomRegular(n, d, false, trial);
    std::vector<int> labels(n);
    for (int& c : labels) c = rng.Int(0, 3);
    Partition p(2, labels);
    // Random bad-edge path system.
    std::vector<Edge> q;
    std::vector<int> out(n, 0), in(n, 0);
    for (const Edge& e : g.Edges()) {
      if (IsGoodEdge(p, e) || out[e.from] || in[e.to] || rng.Int(0, 2) != 0) continue;
      std::vector<Edge> next = q;
      next.push_back(e);
      if (!IsPathSystem(g, next)) continue;
      q = next;
      out[e.from] = in[e.to] = 1;
    }
    Contraction c = Contract(g, p, q);
    EXPECT_EQ(c.graph.n(), n - static_cast<int>(q.size()));
    EXPECT_LE(BadCount(c.graph, c.partition), BadCount(g, p) - static_cast<int>(q.size()));
    int covered = 0;
    for (const auto& o : c.record.origin) covered += static_cast<int>(o.size());
    EXPECT_EQ(covered, n);
    for (int v = 0; v < c.graph.n(); ++v) {
      if (c.record.origin[v].size() == 1) continue;
      int first = c.record.origin[v].front(), last = c.record.origin[v].back();
      EXPECT_EQ(c.partition.Row(v), p.Row(last));
      EXPECT_EQ(c.partition.Col(v), p.Col(first));
    }
    for (int v = 0; v < c.graph.n(); ++v) {
      EXPECT_LE(c.graph.OutDegree(v), d);
      EXPECT_LE(c.graph.InDegree(v), d);
    }
  }
}

TEST(ContractTest, BalancingSystemGivesBalancedPartition) {
  Digraph g = DirectedCycle(6);
  Partition p = Partition::FromCells(6, 2, {{0, 1, 2}, {}, {}, {3, 4, 5}});
  BalanceResult r = BalanceFour(g, p, true);
  Contraction c = Contract(g, p, r.q);
  EXPECT_EQ(c.partition.CellSize(0, 1), 1);
  EXPECT_EQ(c.partition.CellSize(1, 0), 1);
  EXPECT_EQ(c.graph.n(), 4);
}

TEST(ExpandCycleTest, RoundTripThroughContraction) {
  Rng rng(29);
  int expanded = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 9 + trial % 8;
    Digraph g = RandomRegular(n, 3, false, trial);
    OracleResult h = FindHamiltonExact(g, 2000000);
    if (h.outcome != Outcome::kFound) continue;
    // Contract two disjoint stretches of a known Hamilton cycle.
    const std::vector<int>& cyc = h.cycle;
    std::vector<Edge> q = {{cyc[0], cyc[1]}, {cyc[1], cyc[2]}, {cyc[4], cyc[5]}};
    Partition p(2, std::vector<int>(n, 0));
    Contraction c = Contract(g, p, q);
    OracleResult hc = FindHamiltonExact(c.graph, 2000000);
    ASSERT_EQ(hc.outcome, Outcome::kFound);
    std::vector<int> back = ExpandCycle(g, c.graph, c.record, hc.cycle);
    EXPECT_TRUE(VerifyHamiltonCycle(g, back));
    for (const Edge& e : q) {
      auto it = std::find(back.begin(), back.end(), e.from);
      ASSERT_NE(it, back.end());
      int next = (std::next(it) == back.end()) ? back.front() : *std::next(it);
      EXPECT_EQ(next, e.to);
    }
    ++expanded;
  }
  EXPECT_GE(expanded, 50);
  (void)rng;
}

TEST(ExpandCycleTest, RejectsInvalidCycle) {
  Digraph g = DirectedCycle(5);
  Partition p(2, std::vector<int>(5, 0));
  Contraction c = Contract(g, p, {{0, 1}});
  EXPECT_THROW(ExpandCycle(g, c.graph, c.record, {0, 1}), InputError);
}

}  // namespace
}  // namespace hamlab
