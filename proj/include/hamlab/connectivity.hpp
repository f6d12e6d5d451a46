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

#ifndef HAMLAB_CONNECTIVITY_HPP_
#define HAMLAB_CONNECTIVITY_HPP_

#include <cstdint>
#include <optional>
#include <utility>

#include "hamlab/digraph.hpp"

namespace hamlab {

enum class Verdict { kYes, kNo, kUnknown };

const char* VerdictName(Verdict v);

// Number of weakly connected components of g after deleting `removed`.
int WeakComponentCount(const Digraph& g, const VertexSet& removed);

bool IsStronglyConnected(const Digraph& g);

// True iff g has more than k vertices and stays strongly connected after
// deleting any k-1 vertices. Checked with unit vertex-capacity max-flow
// between every ordered non-adjacent pair.
bool StrongKConnectivity(const Digraph& g, int k);

// Lexicographically first pair of vertex-disjoint edges a->b, c->d with
// a in `side`, b outside it, c outside it and d in `side`.
std::optional<std::pair<Edge, Edge>> FindNonIncidentCrossingPair(
    const Digraph& g, const VertexSet& side);

struct WellConnectedness {
  Verdict verdict = Verdict::kUnknown;
  // A side of a bipartition without a non-incident opposite crossing pair.
  std::optional<VertexSet> violation;
  int64_t bipartitions_checked = 0;
};

// Exact mode enumerates every bipartition with both sides of size >= 2 and
// requires n <= 20. Sampled mode draws `samples` random bipartitions and can
// only refute: without a violation the verdict is kUnknown.
WellConnectedness StronglyWellConnectedExact(const Digraph& g);
WellConnectedness StronglyWellConnectedSampled(const Digraph& g, int samples,
                                               uint64_t seed);

}  // namespace hamlab

#endif  // HAMLAB_CONNECTIVITY_HPP_
