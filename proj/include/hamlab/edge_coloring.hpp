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

#ifndef HAMLAB_EDGE_COLORING_HPP_
#define HAMLAB_EDGE_COLORING_HPP_

#include <utility>
#include <vector>

namespace hamlab {

// Undirected loopless multigraph. Parallel edges are repeated pairs.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int MaxDegree() const;
  int MaxMultiplicity() const;
};

struct EdgeColoring {
  std::vector<int> colors;  // one per entry of Multigraph::edges
  int palette = 0;          // distinct colours used, labelled 0..palette-1
};

// Proper edge colouring with at most MaxDegree() + MaxMultiplicity()
// colours, built by fan and alternating-path recolouring. Edges are coloured
// in input order. Throws InputError on loops or out-of-range endpoints.
EdgeColoring EdgeColorMultigraph(const Multigraph& h);

// True when no two edges sharing an endpoint have the same colour.
bool IsProperColoring(const Multigraph& h, const std::vector<int>& colors);

}  // namespace hamlab

#endif  // HAMLAB_EDGE_COLORING_HPP_
