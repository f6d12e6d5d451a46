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

#ifndef HAMLAB_EXPANDER_HPP_
#define HAMLAB_EXPANDER_HPP_

#include <cstdint>
#include <optional>

#include "hamlab/digraph.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

struct ExpansionParams {
  Rational nu;
  Rational tau;
};

// Throws InputError unless 0 < nu < tau < 1.
void ValidateExpansionParams(const ExpansionParams& p);

// A set S inside the size window tau*n <= |S| <= (1-tau)*n whose robust
// outneighbourhood has fewer than |S| + nu*n vertices.
struct ExpansionWitness {
  VertexSet set;
  int rn_size = 0;
};

// Vertices with at least nu*n in-neighbours in s (exact rational compare).
VertexSet RobustOutNeighbourhood(const Digraph& g, const VertexSet& s,
                                 const Rational& nu);

// Smallest and largest admissible |S|: ceil(tau*n) and floor((1-tau)*n).
int WindowLow(int n, const Rational& tau);
int WindowHigh(int n, const Rational& tau);

// Recomputes the robust outneighbourhood and checks every witness condition.
bool IsWitness(const Digraph& g, const ExpansionWitness& w,
               const ExpansionParams& p);

inline constexpr int kExactExpanderMaxN = 22;

enum class WitnessMode { kExact, kHeuristic };

struct WitnessSearch {
  std::optional<ExpansionWitness> witness;
  // True when the absence of a witness is certified (exact mode).
  bool exhaustive = false;
  int64_t evaluations = 0;
};

// Exact mode scans sizes from smallest to largest and, within a size, sets
// in lexicographic order of their sorted members; it needs n <= exact_cap.
// Heuristic mode is one-sided: it runs greedy seeds and random restarts
// improved by local search, spending at most `budget` evaluations.
WitnessSearch FindWitness(const Digraph& g, const ExpansionParams& p,
                          WitnessMode mode, int64_t budget = 200'000,
                          uint64_t seed = 1,
                          int exact_cap = kExactExpanderMaxN);

}  // namespace hamlab

#endif  // HAMLAB_EXPANDER_HPP_
