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

#ifndef HAMLAB_GENERATORS_HPP_
#define HAMLAB_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

// What a construction guarantees, emitted next to generated graphs so that
// downstream checks know what to expect.
struct ExpectedProperties {
  std::string family;
  int vertices = 0;
  int regular_degree = 0;
  bool oriented = false;
  std::optional<bool> hamiltonian;
  std::optional<int> strong_connectivity;
  std::optional<bool> well_connected;
  // A cut whose deletion leaves `cut_components` weak components.
  std::vector<int> cut;
  int cut_components = 0;
};

struct Construction {
  Digraph graph;
  ExpectedProperties props;
};

// Rotational rule i -> i+1, ..., i+(m-1)/2 (mod m). Requires odd m >= 3.
Digraph RotationalTournament(int m);

// Two complete digraphs on n vertices each; inside the first delete both
// edges between a=0 and b=1, inside the second between c=n and d=n+1, then
// add ac, cb, bd, da. Strongly 2-connected, (n-1)-regular, 2n vertices, not
// Hamiltonian. Requires n >= 3.
Construction BridgedCliques(int n);

// Oriented analogue on 4n+2 vertices: two copies of the rotational
// tournament on 2n+1 vertices, each with two edge-disjoint spanning cycles
// sharing exactly two vertices removed, joined by four bridges. The cycle
// pair comes from an exhaustive search, so 3 <= n <= 5.
Construction BridgedTournaments(int n);

// Three rotational tournaments on 6n+1 vertices with a 2n-edge matching
// removed from each, rerouted through two hub vertices z = 18n+3 and
// z' = 18n+4. 3n-regular, oriented, strongly well-connected; deleting the
// hubs leaves three components. Requires n >= 1.
Construction HubTournaments(int n);

// A 2n-regular oriented complete bipartite circulant on A (ids 0..4n-1) and
// B minus one vertex, plus two rotational tournaments on 4n+1 vertices
// wired to the removed vertex's neighbours. 16n+1 vertices, strongly
// n-connected; deleting A leaves 4n+1 components. Requires n >= 1.
Construction BipartiteCore(int n);

// d-regular digraph from d successive random perfect matchings, each drawn
// among the pairs still allowed (no loops, no repeated edges and, when
// oriented, no 2-cycles). Deterministic in the seed.
Digraph RandomRegular(int n, int d, bool oriented, uint64_t seed);

struct GeneratorSpec {
  std::string family;
  int n = 0;
  int d = 0;
  uint64_t seed = 0;
};

// Family names: rotational_tournament, bridged_cliques, bridged_tournaments,
// hub_tournaments, bipartite_core, random_regular_digraph,
// random_regular_oriented. For rotational_tournament n is the vertex count.
Construction Generate(const GeneratorSpec& spec);

const std::vector<std::string>& FamilyNames();

}  // namespace hamlab

#endif  // HAMLAB_GENERATORS_HPP_
