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

#include "hamlab/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "hamlab/connectivity.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

std::vector<Edge> RotationalEdges(int m, int offset) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= (m - 1) / 2; ++j) {
      edges.push_back({offset + i, offset + (i + j) % m});
    }
  }
  return edges;
}

// Rotational tournament on m vertices at `offset`, minus the edges
// (offset + 2j, offset + 2j + 1) for j < matching_size.
std::vector<Edge> TournamentMinusMatching(int m, int offset,
                                          int matching_size) {
  std::vector<Edge> edges;
  for (const Edge& e : RotationalEdges(m, offset)) {
    int local = e.from - offset;
    bool matched = local % 2 == 0 && local / 2 < matching_size &&
                   e.to - offset == local + 1;
    if (!matched) edges.push_back(e);
  }
  return edges;
}

// Calls `visit` on each directed Hamilton cycle of tournament[vertices]
// starting at vertices[0]; stops when `visit` returns true.
bool ForEachCycle(const Digraph& t, const std::vector<int>& vertices,
                  const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> path{vertices[0]};
  std::vector<char> used(t.n(), 1);
  for (int v : vertices) used[v] = 0;
  used[vertices[0]] = 1;
  std::function<bool()> extend = [&]() -> bool {
    int cur = path.back();
    if (path.size() == vertices.size()) {
      return t.HasEdge(cur, path[0]) && visit(path);
    }
    for (int w : t.Out(cur)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  return extend();
}

struct CyclePair {
  std::vector<int> first;
  std::vector<int> second;
};

std::vector<Edge> CycleEdges(const std::vector<int>& cycle) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < cycle.size(); ++i) {
    edges.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  }
  return edges;
}

Digraph AssembleBridgedTournaments(int m, const CyclePair& pair) {
  std::set<Edge> removed;
  for (const auto& e : CycleEdges(pair.first)) removed.insert(e);
  for (const auto& e : CycleEdges(pair.second)) removed.insert(e);
  std::vector<Edge> edges;
  for (int copy = 0; copy < 2; ++copy) {
    for (const Edge& e : RotationalEdges(m, 0)) {
      if (!removed.count(e)) edges.push_back({e.from + copy * m, e.to + copy * m});
    }
  }
  int a = pair.first[0];
  int b = -1;
  for (int v : pair.second) {
    if (v != a && std::find(pair.first.begin(), pair.first.end(), v) !=
                      pair.first.end()) {
      b = v;
    }
  }
  int c = a + m, d = b + m;
  edges.push_back({a, c});
  edges.push_back({c, b});
  edges.push_back({b, d});
  edges.push_back({d, a});
  return Digraph(2 * m, edges);
}

// Searches for two edge-disjoint cycles of the rotational tournament that
// cover it and share exactly vertices 0 and b, keeping the first pair whose
// assembled graph is strongly 2-connected.
CyclePair FindCyclePair(int n) {
  static std::mutex mu;
  static std::map<int, CyclePair> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  int m = 2 * n + 1;
  Digraph t = RotationalTournament(m);
  for (int b = 1; b < m; ++b) {
    std::vector<int> rest;
    for (int v = 1; v < m; ++v) {
      if (v != b) rest.push_back(v);
    }
    int r = static_cast<int>(rest.size());
    for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << r); ++mask) {
      std::vector<int> left{0, b}, right{0, b};
      for (int i = 0; i < r; ++i) {
        ((mask >> i) & 1u ? left : right).push_back(rest[i]);
      }
      CyclePair found;
      bool done = ForEachCycle(t, left, [&](const std::vector<int>& c1) {
        std::vector<Edge> c1_edges = CycleEdges(c1);
        std::set<Edge> first(c1_edges.begin(), c1_edges.end());
        return ForEachCycle(t, right, [&](const std::vector<int>& c2) {
          for (const Edge& e : CycleEdges(c2)) {
            if (first.count(e)) return false;
          }
          CyclePair candidate{c1, c2};
          if (!StrongKConnectivity(AssembleBridgedTournaments(m, candidate), 2)) {
            return false;
          }
          found = candidate;
          return true;
        });
      });
      if (done) {
        cache[n] = found;
        return found;
      }
    }
  }
  throw HypothesisViolation("no admissible cycle pair in the rotational "
                            "tournament on " + std::to_string(m) + " vertices");
}

}  // namespace

Digraph RotationalTournament(int m) {
  if (m < 3 || m % 2 == 0) {
    throw InputError("rotational tournament needs odd m >= 3");
  }
  return Digraph(m, RotationalEdges(m, 0));
}

Construction BridgedCliques(int n) {
  if (n < 3) throw InputError("bridged_cliques needs n >= 3");
  int a = 0, b = 1, c = n, d = n + 1;
  std::vector<Edge> edges;
  for (int copy = 0; copy < 2; ++copy) {
    int base = copy * n;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if ((u == 0 && v == 1) || (u == 1 && v == 0)) continue;
        edges.push_back({base + u, base + v});
      }
    }
  }
  edges.push_back({a, c});
  edges.push_back({c, b});
  edges.push_back({b, d});
  edges.push_back({d, a});
  Construction out{Digraph(2 * n, edges), {}};
  out.props.family = "bridged_cliques";
  out.props.vertices = 2 * n;
  out.props.regular_degree = n - 1;
  out.props.oriented = false;
  out.props.hamiltonian = false;
  out.props.strong_connectivity = 2;
  out.props.well_connected = false;
  return out;
}

Construction BridgedTournaments(int n) {
  if (n < 3 || n > 5) throw InputError("bridged_tournaments needs 3 <= n <= 5");
  CyclePair pair = FindCyclePair(n);
  Construction out{AssembleBridgedTournaments(2 * n + 1, pair), {}};
  out.props.family = "bridged_tournaments";
  out.props.vertices = 4 * n + 2;
  out.props.regular_degree = n - 1;
  out.props.oriented = true;
  out.props.hamiltonian = false;
  out.props.strong_connectivity = 2;
  out.props.well_connected = false;
  return out;
}

Construction HubTournaments(int n) {
  if (n < 1) throw InputError("hub_tournaments needs n >= 1");
  int m = 6 * n + 1;
  int z = 3 * m, z2 = 3 * m + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    int base = i * m;
    auto tournament = TournamentMinusMatching(m, base, 2 * n);
    edges.insert(edges.end(), tournament.begin(), tournament.end());
    // Matching edge j (0-based) runs from x_j = base+2j to y_j = base+2j+1.
    for (int j = 0; j < 2 * n; ++j) {
      int hub = j < n ? z : z2;
      edges.push_back({base + 2 * j, hub});
      edges.push_back({hub, base + 2 * j + 1});
    }
  }
  Construction out{Digraph(3 * m + 2, edges), {}};
  out.props.family = "hub_tournaments";
  out.props.vertices = 18 * n + 5;
  out.props.regular_degree = 3 * n;
  out.props.oriented = true;
  out.props.hamiltonian = false;
  out.props.well_connected = true;
  out.props.cut = {z, z2};
  out.props.cut_components = 3;
  return out;
}

Construction BipartiteCore(int n) {
  if (n < 1) throw InputError("bipartite_core needs n >= 1");
  int side = 4 * n;
  // a_i = i; b_k (k >= 1) = side + k - 1; b_0 is dropped.
  auto b_id = [&](int k) { return side + k - 1; };
  std::vector<Edge> edges;
  for (int i = 0; i < side; ++i) {
    for (int j = 1; j <= 2 * n; ++j) {
      int k = (i + j) % side;
      if (k != 0) edges.push_back({i, b_id(k)});
    }
  }
  for (int k = 1; k < side; ++k) {
    for (int j = 0; j < 2 * n; ++j) edges.push_back({b_id(k), (k + j) % side});
  }
  // Out-neighbours of b_0 are a_0..a_{2n-1}; in-neighbours, listed from
  // a_{4n-1} downwards, are a_{4n-1}..a_{2n}.
  auto a_plus = [&](int j) { return j; };
  auto a_minus = [&](int j) { return side - 1 - j; };
  int m = side + 1;
  int g1 = 2 * side - 1, g2 = g1 + m;
  for (int base : {g1, g2}) {
    auto tournament = TournamentMinusMatching(m, base, n);
    edges.insert(edges.end(), tournament.begin(), tournament.end());
  }
  for (int j = 0; j < n; ++j) {
    edges.push_back({g1 + 2 * j, a_plus(j)});
    edges.push_back({a_minus(j), g1 + 2 * j + 1});
    edges.push_back({g2 + 2 * j, a_plus(j + n)});
    edges.push_back({a_minus(j + n), g2 + 2 * j + 1});
  }
  Construction out{Digraph(16 * n + 1, edges), {}};
  out.props.family = "bipartite_core";
  out.props.vertices = 16 * n + 1;
  out.props.regular_degree = 2 * n;
  out.props.oriented = true;
  out.props.hamiltonian = false;
  out.props.strong_connectivity = n;
  out.props.cut.resize(side);
  std::iota(out.props.cut.begin(), out.props.cut.end(), 0);
  out.props.cut_components = side + 1;
  return out;
}

namespace {

constexpr int kRoundAttempts = 64;
constexpr int kRestarts = 100;

// One attempt at the whole graph; empty on a stuck oriented round.
std::optional<std::vector<Edge>> TryRandomRegular(int n, int d, bool oriented,
                                                  Rng& rng) {
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (int round = 0; round < d; ++round) {
    bool placed = false;
    for (int attempt = 0; attempt < kRoundAttempts && !placed; ++attempt) {
      std::vector<std::vector<int>> allowed(n);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v || used[u][v] || (oriented && used[v][u])) continue;
          allowed[u].push_back(v);
        }
        rng.Shuffle(allowed[u]);
      }
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      rng.Shuffle(order);
      // The allowed pairs form a regular bipartite graph of positive degree,
      // so augmenting paths always complete a perfect matching.
      std::vector<int> match_right(n, -1);
      for (int u : order) {
        std::vector<char> visited(n, 0);
        std::function<bool(int)> augment = [&](int x) -> bool {
          for (int v : allowed[x]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] == -1 || augment(match_right[v])) {
              match_right[v] = x;
              return true;
            }
          }
          return false;
        };
        if (!augment(u)) throw HypothesisViolation("perfect matching not found");
      }
      if (oriented) {
        // A 2-cycle inside one round would break orientation; redraw.
        bool two_cycle = false;
        for (int v = 0; v < n; ++v) {
          int u = match_right[v];
          if (match_right[u] == v) two_cycle = true;
        }
        if (two_cycle) continue;
      }
      for (int v = 0; v < n; ++v) {
        used[match_right[v]][v] = 1;
        edges.push_back({match_right[v], v});
      }
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return edges;
}

}  // namespace

Digraph RandomRegular(int n, int d, bool oriented, uint64_t seed) {
  if (d < 1 || d >= n) throw InputError("random regular needs 1 <= d < n");
  if (oriented && 2 * d > n - 1) {
    throw InputError("oriented regular graph needs d <= (n-1)/2");
  }
  for (int restart = 0; restart < kRestarts; ++restart) {
    Rng rng(seed + static_cast<uint64_t>(restart));
    if (auto edges = TryRandomRegular(n, d, oriented, rng)) {
      return Digraph(n, *edges);
    }
  }
  throw HypothesisViolation("random regular generator exhausted its restarts");
}

const std::vector<std::string>& FamilyNames() {
  static const std::vector<std::string> names = {
      "rotational_tournament", "bridged_cliques",        "bridged_tournaments",
      "hub_tournaments",       "bipartite_core",         "random_regular_digraph",
      "random_regular_oriented"};
  return names;
}

Construction Generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "rotational_tournament") {
    Construction out{RotationalTournament(spec.n), {}};
    out.props.family = f;
    out.props.vertices = spec.n;
    out.props.regular_degree = (spec.n - 1) / 2;
    out.props.oriented = true;
    return out;
  }
  if (f == "bridged_cliques") return BridgedCliques(spec.n);
  if (f == "bridged_tournaments") return BridgedTournaments(spec.n);
  if (f == "hub_tournaments") return HubTournaments(spec.n);
  if (f == "bipartite_core") return BipartiteCore(spec.n);
  if (f == "random_regular_digraph" || f == "random_regular_oriented") {
    bool oriented = f == "random_regular_oriented";
    Construction out{RandomRegular(spec.n, spec.d, oriented, spec.seed), {}};
    out.props.family = f;
    out.props.vertices = spec.n;
    out.props.regular_degree = spec.d;
    out.props.oriented = oriented;
    return out;
  }
  throw InputError("unknown family: " + f);
}

}  // namespace hamlab
