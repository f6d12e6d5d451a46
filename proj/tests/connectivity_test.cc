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

#include "hamlab/connectivity.hpp"

#include <gtest/gtest.h>

#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"

namespace hamlab {
namespace {

TEST(ConnectivityTest, StrongConnectivityOfCycles) {
  EXPECT_TRUE(IsStronglyConnected(DirectedCycle(5)));
  EXPECT_FALSE(IsStronglyConnected(Digraph(3, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(StrongKConnectivity(DirectedCycle(5), 1));
  EXPECT_FALSE(StrongKConnectivity(DirectedCycle(5), 2));
}

TEST(ConnectivityTest, BridgedCliquesAreTwoConnected) {
  for (int n = 3; n <= 5; ++n) {
    Digraph g = BridgedCliques(n).graph;
    EXPECT_TRUE(StrongKConnectivity(g, 2)) << n;
    EXPECT_FALSE(StrongKConnectivity(g, 3)) << n;
  }
}

TEST(ConnectivityTest, CompleteDigraphConnectivity) {
  Digraph k6 = CompleteDigraph(6);
  EXPECT_TRUE(StrongKConnectivity(k6, 5));
  EXPECT_FALSE(StrongKConnectivity(k6, 6));
}

TEST(ConnectivityTest, WeakComponentsAfterDeletion) {
  Digraph g = DirectedCycle(6);
  EXPECT_EQ(WeakComponentCount(g, VertexSet(6)), 1);
  EXPECT_EQ(WeakComponentCount(g, VertexSet::Of(6, {0, 3})), 2);
  EXPECT_EQ(WeakComponentCount(g, VertexSet::Of(6, {0, 2, 4})), 3);
}

TEST(WellConnectedTest, DirectedCycleOnFourVerticesFailsAlternatingSplit) {
  // Sides {0, 2} and {1, 3}: every forward crossing edge meets every
  // backward one.
  WellConnectedness w = StronglyWellConnectedExact(DirectedCycle(4));
  EXPECT_EQ(w.verdict, Verdict::kNo);
  ASSERT_TRUE(w.violation.has_value());
  EXPECT_EQ(w.violation->Members(), (std::vector<int>{0, 2}));
}

TEST(WellConnectedTest, LongerDirectedCycles) {
  for (int n = 5; n <= 8; ++n) {
    EXPECT_EQ(StronglyWellConnectedExact(DirectedCycle(n)).verdict, Verdict::kYes) << n;
  }
}

TEST(WellConnectedTest, CompleteDigraph) {
  EXPECT_EQ(StronglyWellConnectedExact(CompleteDigraph(6)).verdict, Verdict::kYes);
}

TEST(WellConnectedTest, BridgedCliquesViolateAtTheCliques) {
  Digraph g = BridgedCliques(3).graph;
  WellConnectedness w = StronglyWellConnectedExact(g);
  ASSERT_EQ(w.verdict, Verdict::kNo);
  ASSERT_TRUE(w.violation.has_value());
  std::vector<int> side = w.violation->Members();
  bool first = side == std::vector<int>{0, 1, 2};
  bool second = side == std::vector<int>{3, 4, 5};
  EXPECT_TRUE(first || second);
  EXPECT_FALSE(FindNonIncidentCrossingPair(g, *w.violation).has_value());
}

TEST(WellConnectedTest, SampledModeOnlyRefutes) {
  WellConnectedness yes = StronglyWellConnectedSampled(CompleteDigraph(8), 200, 1);
  EXPECT_EQ(yes.verdict, Verdict::kUnknown);
  WellConnectedness no = StronglyWellConnectedSampled(BridgedCliques(4).graph, 5000, 1);
  EXPECT_NE(no.verdict, Verdict::kYes);
}

TEST(WellConnectedTest, ExactModeHasASizeCap) {
  EXPECT_THROW(StronglyWellConnectedExact(DirectedCycle(21)), InputError);
}

TEST(CrossingPairTest, FindsVertexDisjointEdges) {
  Digraph g = DirectedCycle(4);
  auto pair = FindNonIncidentCrossingPair(g, VertexSet::Of(4, {0, 1}));
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->first, (Edge{1, 2}));
  EXPECT_EQ(pair->second, (Edge{3, 0}));
}

}  // namespace
}  // namespace hamlab
