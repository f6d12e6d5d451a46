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

#ifndef HAMLAB_BALANCER_HPP_
#define HAMLAB_BALANCER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/partition.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

// A path system whose edges all run from row `row` to column `col`
// (0-based, row != col).
struct TypedPathSystem {
  std::vector<Edge> edges;
  int row = 0;
  int col = 1;
};

// Checks the type of every edge against a partition and that the edges form
// vertex-disjoint paths.
Check CheckTyped(const Partition& p, const TypedPathSystem& s);

// Three types are symmetric when they are exactly {12, 23, 31} or exactly
// {21, 32, 13}. Otherwise one type is alone in its orientation class and is
// the special element.
struct ThreeSetClass {
  bool symmetric = false;
  std::optional<int> special;  // index into the input list
};

// Types are 0-based (row, col) pairs over k = 3. Throws InputError on a
// repeated type, a diagonal type or an index outside [0, 3).
ThreeSetClass ClassifyThreeSet(const std::array<std::pair<int, int>, 3>& types);

struct DecomposedPath {
  std::vector<Edge> edges;  // consecutive edges share a vertex
  std::vector<int> system;  // source system of each edge
  bool cycle = false;
};

struct AntiDirectedDecomposition {
  ThreeSetClass kind;
  // Symmetric: the directed paths and cycles of the union. Anti-symmetric:
  // its maximal anti-directed paths. Sorted by first edge.
  std::vector<DecomposedPath> paths;
};

// Throws InputError when a system does not match its type in p3.
AntiDirectedDecomposition DecomposeAntiDirected(
    const std::array<TypedPathSystem, 3>& systems, const Partition& p3);

// Structural check: every edge used once, and for the anti-symmetric case
// each path is anti-directed with at most three edges, a two-edge path has
// exactly one special edge and a three-edge path has three distinct systems
// with the special one in the middle.
Check CheckDecomposition(const AntiDirectedDecomposition& d,
                         const std::array<TypedPathSystem, 3>& systems);

// Signs m with m1x1 + m2x2 + m3x3 = t = m1x1 + m4x4 + m5x5, found by scanning
// the 32 sign vectors with +1 before -1 and m1 most significant. Throws
// InputError unless x1+x2+x3 and x1+x4+x5 are both congruent to t mod 2
// and all inputs are bits.
std::array<int, 5> ChooseSigns(int t, const std::array<int, 5>& x);

struct BalanceResult {
  std::vector<Edge> q;                 // path system of bad edges, sorted
  std::vector<std::vector<int64_t>> a;  // a[i][j]: edges of q from row i to col j
  std::vector<int64_t> targets;        // |V_i*| - |V_*i|
  std::string route;                   // which construction produced q
  bool reversed = false;               // worked on the transposed graph
  std::vector<int> index_map;          // relabelling used internally
  // Set when the construction first moved a vertex; q refers to it.
  std::optional<Partition> partition;
  // Upper bound on e(q) implied by the construction: 2|B|/d for the nine
  // partition, |V12| - |V21| (or 2) for the four partition.
  int64_t edge_bound = 0;
  std::vector<std::string> notes;
};

// Edge counts a[i][j] of `edges` between row i and column j for i != j.
std::vector<std::vector<int64_t>> TypeCounts(const Partition& p,
                                             const std::vector<Edge>& edges);

// True iff sum_j a[i][j] - sum_j a[j][i] = |V_i*| - |V_*i| for every i.
bool BalanceIdentityHolds(const Partition& p, const std::vector<Edge>& edges);

// Selects a path system of bad edges of a d-regular oriented graph whose
// contraction balances the 9-partition: indices are permuted (and the graph
// reversed if needed) so that n_1, n_2 >= 0; then either three path systems
// of a symmetric 3-set are cut to size, or an anti-symmetric 3-set is split
// into maximal anti-directed paths and edges are picked class by class.
// Throws InputError when g is not regular and oriented or p3.k() != 3, and
// HypothesisViolation when a quota or degree condition fails.
BalanceResult BalanceNine(const Digraph& g, const Partition& p3,
                          uint64_t seed = 1);

// Four-partition version for d-regular digraphs. Produces q with
// a12 - a21 = |V12| - |V21| such that both off-diagonal cells are non-empty
// after contraction. Case routes: "empty" (V12 = V21 = {}; needs
// well_connected and uses two non-incident crossing edges), "quota"
// (|V21| > 0), "long-path" (|V12| >= 2, V21 = {}), "single" (|V12| = 1,
// V21 = {}). If |V21| > |V12| the indices are swapped first.
BalanceResult BalanceFour(const Digraph& g, const Partition& p2,
                          bool well_connected, uint64_t seed = 1);

}  // namespace hamlab

#endif  // HAMLAB_BALANCER_HPP_
