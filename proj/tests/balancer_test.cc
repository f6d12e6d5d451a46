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

#include "hamlab/balancer.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "hamlab/contraction.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

Partition RandomPartition(Rng& rng, int n, int k) {
  std::vector<int> labels(n);
  for (int& c : labels) c = rng.Int(0, k * k - 1);
  return Partition(k, labels);
}

void ExpectValidBalance(const Digraph& g, const Partition& p, const BalanceResult& r) {
  EXPECT_TRUE(IsPathSystem(g, r.q));
  for (const Edge& e : r.q) EXPECT_FALSE(IsGoodEdge(p, e));
  EXPECT_TRUE(BalanceIdentityHolds(p, r.q));
  EXPECT_LE(static_cast<int64_t>(r.q.size()), r.edge_bound);
  EXPECT_EQ(r.a, TypeCounts(p, r.q));
  for (int i = 0; i < p.k(); ++i) {
    int64_t out = 0, in = 0;
    for (int j = 0; j < p.k(); ++j) {
      if (j == i) continue;
      out += r.a[i][j];
      in += r.a[j][i];
    }
    EXPECT_EQ(out - in, r.targets[i]);
    EXPECT_EQ(r.targets[i], p.RowSize(i) - p.ColSize(i));
  }
}

TEST(ClassifyThreeSetTest, SymmetricAndSpecialTypes) {
  ThreeSetClass sym = ClassifyThreeSet({{{0, 1}, {1, 2}, {2, 0}}});
  EXPECT_TRUE(sym.symmetric);
  EXPECT_FALSE(sym.special.has_value());
  EXPECT_TRUE(ClassifyThreeSet({{{1, 0}, {2, 1}, {0, 2}}}).symmetric);
  ThreeSetClass a = ClassifyThreeSet({{{1, 2}, {0, 1}, {0, 2}}});
  EXPECT_FALSE(a.symmetric);
  EXPECT_EQ(a.special, 2);
  ThreeSetClass b = ClassifyThreeSet({{{1, 2}, {0, 1}, {1, 0}}});
  EXPECT_FALSE(b.symmetric);
  EXPECT_EQ(b.special, 2);
}

TEST(ClassifyThreeSetTest, RejectsBadTypes) {
  EXPECT_THROW(ClassifyThreeSet({{{0, 1}, {0, 1}, {1, 2}}}), InputError);
  EXPECT_THROW(ClassifyThreeSet({{{0, 0}, {0, 1}, {1, 2}}}), InputError);
  EXPECT_THROW(ClassifyThreeSet({{{0, 3}, {0, 1}, {1, 2}}}), InputError);
}

TEST(DecomposeTest, AntiDirectedThreeEdgePath) {
  // w = 0 in row 2, a = 1 in column 3, u = 2 in row 1, b = 3 in column 2.
  Digraph g(4, {{0, 1}, {2, 1}, {2, 3}});
  Partition p(3, {3, 2, 0, 7});
  std::array<TypedPathSystem, 3> systems{{{{{0, 1}}, 1, 2}, {{{2, 1}}, 0, 2}, {{{2, 3}}, 0, 1}}};
  for (const auto& s : systems) EXPECT_TRUE(CheckTyped(p, s));
  AntiDirectedDecomposition d = DecomposeAntiDirected(systems, p);
  EXPECT_FALSE(d.kind.symmetric);
  EXPECT_EQ(d.kind.special, 1);
  ASSERT_EQ(d.paths.size(), 1u);
  EXPECT_EQ(d.paths[0].edges, (std::vector<Edge>{{0, 1}, {2, 1}, {2, 3}}));
  EXPECT_EQ(d.paths[0].system, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(CheckDecomposition(d, systems));
}

TEST(DecomposeTest, LoneSpecialEdge) {
  Digraph g(4, {{2, 1}});
  Partition p(3, {3, 2, 0, 7});
  std::array<TypedPathSystem, 3> systems{{{{}, 1, 2}, {{{2, 1}}, 0, 2}, {{}, 0, 1}}};
  AntiDirectedDecomposition d = DecomposeAntiDirected(systems, p);
  ASSERT_EQ(d.paths.size(), 1u);
  EXPECT_EQ(d.paths[0].edges.size(), 1u);
}

TEST(DecomposeTest, SymmetricDisjointEdges) {
  // Types 12, 23, 31 with one edge each on disjoint vertices.
  Partition p(3, {0, 4, 8, 3, 6, 7});
  std::array<TypedPathSystem, 3> systems{
      {{{{0, 1}}, 0, 1}, {{{3, 2}}, 1, 2}, {{{5, 4}}, 2, 0}}};
  for (const auto& s : systems) ASSERT_TRUE(CheckTyped(p, s));
  AntiDirectedDecomposition d = DecomposeAntiDirected(systems, p);
  EXPECT_TRUE(d.kind.symmetric);
  ASSERT_EQ(d.paths.size(), 3u);
  for (const auto& path : d.paths) {
    EXPECT_EQ(path.edges.size(), 1u);
    EXPECT_FALSE(path.cycle);
  }
  EXPECT_TRUE(CheckDecomposition(d, systems));
}

TEST(DecomposeTest, RandomAntiSymmetricDecompositionsSatisfyStructure) {
  Rng rng(9);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 18;
    Digraph g = RandomRegular(n, 3, true, trial);
    Partition p = RandomPartition(rng, n, 3);
    std::array<std::pair<int, int>, 3> types{{{1, 2}, {0, 2}, {0, 1}}};
    std::array<TypedPathSystem, 3> systems;
    std::vector<int> used_out(n, 0), used_in(n, 0);
    for (int s = 0; s < 3; ++s) {
      systems[s].row = types[s].first;
      systems[s].col = types[s].second;
      std::vector<int> out(n, 0), in(n, 0);
      for (const Edge& e : g.Edges()) {
        if (p.Row(e.from) != systems[s].row || p.Col(e.to) != systems[s].col) continue;
        if (out[e.from] || in[e.to]) continue;
        std::vector<Edge> trial_edges = systems[s].edges;
        trial_edges.push_back(e);
        if (!IsPathSystem(g, trial_edges)) continue;
        out[e.from] = in[e.to] = 1;
        systems[s].edges.push_back(e);
      }
    }
    AntiDirectedDecomposition d = DecomposeAntiDirected(systems, p);
    Check c = CheckDecomposition(d, systems);
    EXPECT_TRUE(c) << c.reason;
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(ChooseSignsTest, Examples) {
  EXPECT_EQ(ChooseSigns(0, {0, 0, 0, 0, 0}), (std::array<int, 5>{1, 1, 1, 1, 1}));
  std::array<int, 5> m = ChooseSigns(1, {0, 0, 1, 0, 1});
  EXPECT_EQ(m[2], 1);
  EXPECT_EQ(m[4], 1);
  EXPECT_THROW(ChooseSigns(1, {0, 0, 0, 0, 0}), InputError);
  EXPECT_THROW(ChooseSigns(0, {2, 0, 0, 0, 0}), InputError);
}

TEST(ChooseSignsTest, EveryCongruentInputHasSigns) {
  int admissible = 0;
  for (int t = 0; t <= 1; ++t) {
    for (int mask = 0; mask < 32; ++mask) {
      std::array<int, 5> x;
      for (int i = 0; i < 5; ++i) x[i] = (mask >> (4 - i)) & 1;
      bool congruent =
          (x[0] + x[1] + x[2]) % 2 == t && (x[0] + x[3] + x[4]) % 2 == t;
      if (!congruent) {
        EXPECT_THROW(ChooseSigns(t, x), InputError);
        continue;
      }
      ++admissible;
      std::array<int, 5> m = ChooseSigns(t, x);
      for (int s : m) EXPECT_TRUE(s == 1 || s == -1);
      EXPECT_EQ(m[0] * x[0] + m[1] * x[1] + m[2] * x[2], t);
      EXPECT_EQ(m[0] * x[0] + m[3] * x[3] + m[4] * x[4], t);
    }
  }
  EXPECT_EQ(admissible, 16);
}

TEST(BalanceNineTest, BalancedInputGivesEmptySystem) {
  Digraph g = RotationalTournament(9);
  Partition p(3, {0, 0, 0, 4, 4, 4, 8, 8, 8});
  BalanceResult r = BalanceNine(g, p);
  EXPECT_TRUE(r.q.empty());
  EXPECT_EQ(r.route, "balanced");
}

TEST(BalanceNineTest, RejectsWrongInputs) {
  Partition p(3, std::vector<int>(9, 0));
  EXPECT_THROW(BalanceNine(RandomRegular(9, 3, false, 1), p), InputError);
  EXPECT_THROW(BalanceNine(RotationalTournament(9), Partition(2, std::vector<int>(9, 0))),
               InputError);
}

TEST(BalanceNineTest, RandomExtremalizedInstances) {
  Rng rng(13);
  int successes = 0, unbalanced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 15 + trial % 16;
    int d = 2 + trial % 3;
    Digraph g = RandomRegular(n, d, true, trial);
    Partition p = Extremalize(g, RandomPartition(rng, n, 3), Rational(0)).partition;
    try {
      BalanceResult r = BalanceNine(g, p, trial);
      ++successes;
      ExpectValidBalance(g, p, r);
      bool balanced = true;
      for (int64_t t : r.targets) balanced = balanced && t == 0;
      unbalanced += !balanced;
      // Contracting a balancing system balances every row and column.
      Contraction c = Contract(g, p, r.q);
      for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(c.partition.RowSize(i), c.partition.ColSize(i));
      }
    } catch (const HypothesisViolation&) {
    }
  }
  EXPECT_GE(successes, 100);
  EXPECT_GT(unbalanced, 50);
}

TEST(BalanceFourTest, EmptyOffDiagonalUsesCrossingPair) {
  Digraph g = DirectedCycle(6);
  Partition p = Partition::FromCells(6, 2, {{0, 1, 2}, {}, {}, {3, 4, 5}});
  BalanceResult r = BalanceFour(g, p, true);
  EXPECT_EQ(r.route, "empty");
  EXPECT_EQ(r.q, (std::vector<Edge>{{2, 3}, {5, 0}}));
  ExpectValidBalance(g, p, r);
  Contraction c = Contract(g, p, r.q);
  EXPECT_EQ(c.partition.CellSize(0, 1), 1);
  EXPECT_EQ(c.partition.CellSize(1, 0), 1);
  EXPECT_THROW(BalanceFour(g, p, false), HypothesisViolation);
}

TEST(BalanceFourTest, BalancedNonEmptyNeedsNothing) {
  Digraph g = DirectedCycle(8);
  Partition p = Partition::FromCells(8, 2, {{1, 2, 3}, {0}, {4}, {5, 6, 7}});
  BalanceResult r = BalanceFour(g, p, false);
  EXPECT_EQ(r.route, "quota");
  EXPECT_TRUE(r.q.empty());
}

TEST(BalanceFourTest, SingleExtraVertexTakesOneEdge) {
  // Circulant on 8 vertices with jumps 1 and 2; vertex 3 alone in V12.
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v) {
    edges.push_back({v, (v + 1) % 8});
    edges.push_back({v, (v + 2) % 8});
  }
  Digraph g(8, edges);
  Partition p = Partition::FromCells(8, 2, {{0, 1, 2}, {3}, {}, {4, 5, 6, 7}});
  BalanceResult r = BalanceFour(g, p, false);
  EXPECT_EQ(r.route, "single");
  EXPECT_EQ(r.q, (std::vector<Edge>{{2, 4}}));
  ExpectValidBalance(g, p, r);
  Contraction c = Contract(g, p, r.q);
  EXPECT_EQ(c.partition.CellSize(0, 1), 1);
  EXPECT_EQ(c.partition.CellSize(1, 0), 1);
}

// Two 4-regular circulant blocks A = 0..9 and B = 10..19. Each extra
// vertex takes over two edges inside A and two inside B, so it has two
// in-neighbours and two out-neighbours on each side. With `bridge`, one edge
// of each block is rewired into a crossing pair between A and B.
Digraph TwoBlocks(int extra, bool bridge) {
  std::set<Edge> edges;
  for (int base : {0, 10}) {
    for (int v = 0; v < 10; ++v) {
      for (int j = 1; j <= 4; ++j) edges.insert({base + v, base + (v + j) % 10});
    }
  }
  const int tails[2][2] = {{0, 5}, {2, 7}};
  for (int x = 0; x < extra; ++x) {
    int vx = 20 + x;
    for (int t : tails[x]) {
      for (int base : {0, 10}) {
        edges.erase({base + t, base + t + 1});
        edges.insert({base + t, vx});
        edges.insert({vx, base + t + 1});
      }
    }
  }
  if (bridge) {
    edges.erase({4, 8});
    edges.erase({14, 18});
    edges.insert({4, 18});
    edges.insert({14, 8});
  }
  return Digraph(20 + extra, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<int> Range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

TEST(BalanceFourTest, TwoExtraVerticesUseShortPath) {
  Digraph g = TwoBlocks(2, false);
  ASSERT_EQ(Profile(g).regular_degree, 4);
  Partition p = Partition::FromCells(22, 2, {Range(0, 10), {20, 21}, {}, Range(10, 20)});
  BalanceResult r = BalanceFour(g, p, false);
  EXPECT_EQ(r.route, "long-path");
  EXPECT_EQ(r.q.size(), 2u);
  ExpectValidBalance(g, p, r);
  Contraction c = Contract(g, p, r.q);
  EXPECT_EQ(c.partition.CellSize(0, 1), 1);
  EXPECT_EQ(c.partition.CellSize(1, 0), 1);
}

TEST(BalanceFourTest, TransposedInstanceIsFlipped) {
  Digraph g = TwoBlocks(2, false);
  Partition p = Partition::FromCells(22, 2, {Range(10, 20), {}, {20, 21}, Range(0, 10)});
  BalanceResult r = BalanceFour(g, p, false);
  EXPECT_EQ(r.index_map, (std::vector<int>{1, 0}));
  EXPECT_EQ(r.route, "long-path");
  ExpectValidBalance(g, p, r);
}

TEST(BalanceFourTest, HalfAndHalfVertexIsMoved) {
  Digraph g = TwoBlocks(1, true);
  ASSERT_EQ(Profile(g).regular_degree, 4);
  Partition p = Partition::FromCells(21, 2, {Range(0, 10), {20}, {}, Range(10, 20)});
  BalanceResult r = BalanceFour(g, p, true);
  EXPECT_EQ(r.route, "single-moved");
  ASSERT_TRUE(r.partition.has_value());
  EXPECT_EQ(r.partition->Cell(20), 0);
  EXPECT_EQ(r.q.size(), 2u);
  ExpectValidBalance(g, *r.partition, r);
  EXPECT_THROW(BalanceFour(g, p, false), HypothesisViolation);
  Digraph no_bridge = TwoBlocks(1, false);
  EXPECT_THROW(BalanceFour(no_bridge, p, true), HypothesisViolation);
}

TEST(BalanceFourTest, RandomInstancesBalanceOrDeclareViolation) {
  Rng rng(19);
  int successes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 10 + trial % 15;
    int d = 2 + trial % 5;
    Digraph g = RandomRegular(n, d, trial % 2 == 0 && n >= 2 * d + 1, trial);
    Partition p = Extremalize(g, RandomPartition(rng, n, 2), Rational(0)).partition;
    try {
      BalanceResult r = BalanceFour(g, p, true, trial);
      ++successes;
      const Partition& used = r.partition ? *r.partition : p;
      ExpectValidBalance(g, used, r);
      Contraction c = Contract(g, used, r.q);
      EXPECT_EQ(c.partition.CellSize(0, 1), c.partition.CellSize(1, 0));
      EXPECT_GT(c.partition.CellSize(0, 1), 0) << r.route;
    } catch (const HypothesisViolation&) {
    }
  }
  EXPECT_GE(successes, 30);
}

}  // namespace
}  // namespace hamlab
