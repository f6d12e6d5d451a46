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

#ifndef HAMLAB_IDENTIFICATION_HPP_
#define HAMLAB_IDENTIFICATION_HPP_

#include <cstdint>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/expander.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/partition.hpp"
#include "hamlab/rational.hpp"
#include "hamlab/trace.hpp"

namespace hamlab {

// Undirected bipartite graph between V_i* and V_*i (0-based i) whose edges
// are the good edges of block i. Members of V_ii appear on both sides.
struct BipartiteView {
  int i = 0;
  std::vector<int> left;   // V_i*, ascending
  std::vector<int> right;  // V_*i, ascending
  std::vector<Edge> edges;  // from a left vertex to a right vertex, sorted
};

BipartiteView MakeBipartiteView(const Digraph& g, const Partition& p2, int i);

// Bijections from [t] + V_ii onto V_i* and onto V_*i that fix V_ii. Label
// r < t is sent to out_map[r] by the first and to in_map[r] by the second.
// For i = 0, out_map lands in V12 and in_map in V21; for i = 1 the roles
// swap. The identification digraph uses ids 0..t-1 for labels and t + k for
// diag[k].
struct ProperPair {
  int i = 0;
  int t = 0;
  std::vector<int> diag;     // V_ii, ascending
  std::vector<int> out_map;  // size t
  std::vector<int> in_map;   // size t

  int size() const { return t + static_cast<int>(diag.size()); }
  int OutImage(int x) const { return x < t ? out_map[x] : diag[x - t]; }
  int InImage(int x) const { return x < t ? in_map[x] : diag[x - t]; }
};

// Throws InputError unless both maps are bijections onto the right cells.
void ValidatePair(const Partition& p2, const ProperPair& pair);

// Sorts V12 and V21 ascending and pairs them by rank. Throws InputError
// unless |V12| = |V21| > 0.
ProperPair CanonicalPair(const Partition& p2, int i);

struct IdentificationGraph {
  Digraph graph;
  // (edge of graph, edge of g) for every identified edge, sorted.
  std::vector<std::pair<Edge, Edge>> correspondence;
  int loops = 0;
};

// Vertex x -> y iff OutImage(x) -> InImage(y) is an edge of g.
IdentificationGraph Identify(const Digraph& g, const Partition& p2,
                             const ProperPair& pair, bool drop_loops = false);

struct LiftResult {
  std::vector<int> label_order;  // labels in the order the cycle visits them
  // path_of_label[r]: the path of g from out_map[r] to in_map[next label].
  std::vector<std::vector<int>> path_of_label;
  ProperPair pair2;  // the induced proper pair for index 1
};

// Cuts a Hamilton cycle of the index-0 identification graph at its labels
// and turns each piece into a path of g. Throws InputError when the cycle
// fails verification.
LiftResult LiftHamilton(const Digraph& g, const Partition& p2,
                        const ProperPair& pair1, const Digraph& j1,
                        const std::vector<int>& cycle1);

// Replaces each label of a Hamilton cycle of the index-1 identification
// graph by its lifted path. Throws std::logic_error when the result is not
// a Hamilton cycle of g.
std::vector<int> Splice(const Digraph& g, const LiftResult& lift,
                        const std::vector<int>& cycle2);

struct DriverConfig {
  int64_t oracle_budget = kDefaultOracleBudget;
  uint64_t seed = 1;
  Rational tau = Rational(1, 5);
  // Exact expander check on identification graphs up to this size, kept as
  // a trace diagnostic only. Zero disables it.
  int expander_diagnostic_max_n = 14;
  ExpansionParams expansion{Rational(1, 20), Rational(1, 5)};
};

struct DriverResult {
  Outcome outcome = Outcome::kUnknown;  // kFound or a fallback verdict
  std::vector<int> cycle;
  Trace trace;
  bool fallback = false;  // the verdict came from the oracle on g itself
};

// Builds both identification graphs for a balanced 4-partition and
// searches them with the oracle. Returns kFound with a verified cycle of g,
// or kUnknown with the failing stage in the trace. Throws InputError unless
// |V12| = |V21| > 0.
DriverResult HamiltonFromFourPartition(const Digraph& g, const Partition& p2,
                                       const DriverConfig& config);

// Nine-partition driver for regular oriented graphs: chooses the index to
// isolate, balances, contracts, coarsens to a 4-partition W, lifts through
// the index-0 identification graph and solves the index-1 one with the
// four-partition driver on its induced partition. Any stage failure falls
// back to the oracle on g, marked in the trace.
DriverResult HamiltonFromNinePartition(const Digraph& g, const Partition& p3,
                                       const DriverConfig& config);

// The index c isolated by the nine-partition driver: the first index with
// tau*n + |V_cc| <= (sizes of the 2x2 block on the other indices) and
// tau*n <= |V_ab| + |V_ba| for the other indices a, b; if none qualifies,
// the first meeting the second condition, else the first meeting the
// first, else 2.
int ChooseIsolatedIndex(const Partition& p3, const Rational& tau);

// The partition of the index-1 identification graph of W (the coarsening
// of p3 with groups {2} and {0, 1}) used by the nine-partition driver.
Partition InducedPartition(const Partition& p3, const ProperPair& pair2);

}  // namespace hamlab

#endif  // HAMLAB_IDENTIFICATION_HPP_
