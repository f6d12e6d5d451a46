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

#ifndef HAMLAB_ORACLE_HPP_
#define HAMLAB_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

enum class Outcome { kFound, kNotHamiltonian, kUnknown };

const char* OutcomeName(Outcome o);

struct OracleResult {
  Outcome outcome = Outcome::kUnknown;
  std::vector<int> cycle;  // set iff kFound
  std::string method;      // "held_karp" or "branch_and_bound"
  int64_t nodes = 0;
};

inline constexpr int kHeldKarpMaxN = 24;
inline constexpr int64_t kDefaultOracleBudget = 20'000'000;

// Bitmask dynamic program over paths starting at vertex 0. Exact for
// n <= kHeldKarpMaxN; throws InputError beyond.
OracleResult HeldKarp(const Digraph& g);

// Depth-first search from vertex 0 with neighbours in increasing order,
// forced moves and reachability pruning. Returns kUnknown once `budget`
// search nodes are spent. Supports n <= 256.
OracleResult BranchAndBound(const Digraph& g, int64_t budget);

// Tries a short branch-and-bound run first, then Held-Karp when n is small
// enough, otherwise branch-and-bound with the full budget.
OracleResult FindHamiltonExact(const Digraph& g,
                               int64_t budget = kDefaultOracleBudget);

struct CutCertificate {
  std::vector<int> cut;
  int components = 0;
};

// Deleting k >= 1 vertices from a Hamiltonian digraph leaves at most k weak
// components, and with no deletion the graph is weakly connected.
bool CertificateHolds(const Digraph& g, const CutCertificate& c);

// Tries the supplied candidate cuts first, then every cut of size
// 1..max_cut_size ordered by total degree and then lexicographically.
std::optional<CutCertificate> NonHamiltonicityCertificate(
    const Digraph& g, int max_cut_size = 4,
    const std::vector<std::vector<int>>& candidates = {});

}  // namespace hamlab

#endif  // HAMLAB_ORACLE_HPP_
