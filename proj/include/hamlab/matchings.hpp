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

#ifndef HAMLAB_MATCHINGS_HPP_
#define HAMLAB_MATCHINGS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

struct BoundedMatchingResult {
  std::vector<Edge> matching;  // sorted; no two edges share an endpoint
  VertexSet w_plus;            // out-degree >= theta*d
  VertexSet w_minus;           // in-degree >= theta*d
};

// Finds a matching M and high-degree sets W+, W- with
//   (i)   4*theta*e(M) + |W+| + |W-| >= e(G)/d,
//   (ii)  x not in W+ and y not in W- for every x->y in M,
//   (iii) e(M) <= e(G)/(theta*d).
// M is the largest colour class of a multigraph edge colouring of the edges
// avoiding W+ tails and W- heads, trimmed to the bound in (iii).
// Throws InputError unless max semidegree <= d and 0 < theta < 1, and
// HypothesisViolation if (i) cannot be met (only possible when
// 0 < e(G) < theta*d and no vertex reaches the threshold).
BoundedMatchingResult BoundedMatching(const Digraph& g, const Rational& d,
                                      const Rational& theta);

// Re-checks (i)-(iii) and that M is a matching of g, with exact arithmetic.
Check CheckBoundedMatching(const Digraph& g, const Rational& d,
                           const Rational& theta,
                           const BoundedMatchingResult& result);

struct JointMatchingResult {
  std::vector<Edge> matching;  // sorted
  int attempts = 0;            // random marking rounds used
  bool exact_fallback = false;
};

inline constexpr int kJointMatchingRetryCap = 64;
inline constexpr int kJointMatchingExactMaxEdges = 24;

// Picks a matching H from the union of the given matchings (edges read as
// unordered pairs) with |H & M_i| * (r^2 + 1) >= e(M_i) for every i. Each
// round keeps, at every vertex, one uniformly random incident union edge
// and discards the others. After retry_cap failed rounds an exact search
// runs when the union has at most kJointMatchingExactMaxEdges edges.
// Throws InputError if some M_i is not a matching or the union has a
// vertex of degree above r, and HypothesisViolation if no round succeeds
// and the exact search is unavailable or proves the quotas infeasible.
JointMatchingResult JointMatching(const std::vector<std::vector<Edge>>& matchings,
                                  int r, uint64_t seed,
                                  int retry_cap = kJointMatchingRetryCap);

struct CycleFreeResult {
  std::vector<std::vector<Edge>> systems;  // one path system per subgraph
  std::vector<int64_t> quotas;             // floor(e(G_i) / (alpha*n))
  Rational theta;
  std::string method;  // "matchings" or "greedy"
  std::vector<std::string> diagnostics;
};

inline constexpr int kCycleFreeGreedyRestarts = 200;

// Selects path systems Q_i within pairwise edge-disjoint subgraphs G_i of g
// such that the union of all Q_i has no directed cycle and
// e(Q_i) = floor(e(G_i) / (alpha*n)). High-degree vertices of G_i are
// served by pendant edges to fresh vertices; the rest comes from a joint
// matching. When that route fails (typically because theta is tiny at small
// n), a seeded greedy selection with kCycleFreeGreedyRestarts restarts takes
// over. Throws InputError on overlapping subgraphs, edges missing from g,
// or a subgraph with max semidegree above alpha*n, and HypothesisViolation
// when both routes fail.
CycleFreeResult CycleFreePathSystems(const Digraph& g,
                                     const std::vector<std::vector<Edge>>& subgraphs,
                                     const Rational& alpha, uint64_t seed);

// The theta used by CycleFreePathSystems for k subgraphs with `edges` edges
// in total. Appends a note to `diagnostics` when the admissible interval
// sqrt(8*gamma)/alpha < theta < 1/(8k(k^3+k)^2), gamma = edges/n^2, is
// empty.
Rational ChooseTheta(int n, int64_t edges, int k, const Rational& alpha,
                     std::vector<std::string>* diagnostics);

}  // namespace hamlab

#endif  // HAMLAB_MATCHINGS_HPP_
