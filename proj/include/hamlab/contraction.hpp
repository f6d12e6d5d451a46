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

#ifndef HAMLAB_CONTRACTION_HPP_
#define HAMLAB_CONTRACTION_HPP_

#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/partition.hpp"

namespace hamlab {

struct ContractedPath {
  int vertex = 0;         // id of the replacement vertex
  std::vector<int> path;  // original vertices, in order
  int from_cell = 0;      // cell of the first vertex before contraction
  int to_cell = 0;        // cell of the replacement vertex
};

// Maps the contracted graph back to the original one. Vertex x of the
// contracted graph stands for the original vertices origin[x] (a single
// vertex unless x replaced a path).
struct ContractionRecord {
  int original_n = 0;
  std::vector<std::vector<int>> origin;
  std::vector<ContractedPath> paths;
  int dropped_loops = 0;  // paths u..v with an edge v->u
};

struct Contraction {
  Digraph graph;
  Partition partition;
  ContractionRecord record;
};

// Replaces every path u..v of q by a fresh vertex x with the in-neighbours
// of u and the out-neighbours of v, placed in cell (row of v, column of u).
// Untouched vertices keep their relative order and come first; replacement
// vertices follow in order of their first original vertex. A loop x->x
// (from an edge v->u) is dropped. Throws InputError when q is not a path
// system of g or p does not match g.
Contraction Contract(const Digraph& g, const Partition& p,
                     const std::vector<Edge>& q);

// Substitutes each replacement vertex of `cycle` by its path. Throws
// InputError if `cycle` is not a Hamilton cycle of `contracted`, and
// std::logic_error if the result fails verification in `original`.
std::vector<int> ExpandCycle(const Digraph& original, const Digraph& contracted,
                             const ContractionRecord& record,
                             const std::vector<int>& cycle);

}  // namespace hamlab

#endif  // HAMLAB_CONTRACTION_HPP_
