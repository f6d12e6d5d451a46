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

#include "hamlab/digraph.hpp"

#include <algorithm>
#include <string>

#include "hamlab/errors.hpp"

namespace hamlab {

VertexSet VertexSet::Of(int n, const std::vector<int>& members) {
  VertexSet s(n);
  for (int v : members) {
    if (v < 0 || v >= n) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    s.Insert(v);
  }
  return s;
}

VertexSet VertexSet::Full(int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) s.Insert(v);
  return s;
}

int VertexSet::Size() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::Empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

std::vector<int> VertexSet::Members() const {
  std::vector<int> out;
  ForEach([&](int v) { out.push_back(v); });
  return out;
}

int VertexSet::CountCommon(const VertexSet& other) const {
  int total = 0;
  for (size_t i = 0; i < words_.size(); ++i) {
    total += std::popcount(words_[i] & other.words_[i]);
  }
  return total;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

int VertexSet::First() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  }
  return -1;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Digraph::Digraph(int n, const std::vector<Edge>& edges, bool loops_allowed)
    : n_(n),
      loops_allowed_(loops_allowed),
      out_(n),
      in_(n),
      out_set_(n, VertexSet(n)),
      in_set_(n, VertexSet(n)) {
  if (n < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw InputError("edge (" + std::to_string(e.from) + "," +
                       std::to_string(e.to) + ") out of range");
    }
    if (e.from == e.to && !loops_allowed) {
      throw InputError("loop at vertex " + std::to_string(e.from));
    }
    if (out_set_[e.from].Contains(e.to)) {
      throw InputError("repeated edge (" + std::to_string(e.from) + "," +
                       std::to_string(e.to) + ")");
    }
    out_set_[e.from].Insert(e.to);
    in_set_[e.to].Insert(e.from);
  }
  for (int v = 0; v < n; ++v) {
    out_[v] = out_set_[v].Members();
    in_[v] = in_set_[v].Members();
  }
  edge_count_ = static_cast<int64_t>(edges.size());
}

bool Digraph::HasLoops() const {
  for (int v = 0; v < n_; ++v) {
    if (HasEdge(v, v)) return true;
  }
  return false;
}

std::vector<Edge> Digraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) out.push_back({u, v});
  }
  return out;
}

Digraph Digraph::Transposed() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) edges.push_back({v, u});
  }
  return Digraph(n_, edges, loops_allowed_);
}

Digraph Digraph::WithoutLoops() const {
  std::vector<Edge> edges;
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return Digraph(n_, edges, false);
}

Digraph Digraph::Induced(const std::vector<int>& vertices) const {
  std::vector<int> index(n_, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_ || index[v] != -1) {
      throw InputError("bad vertex list for induced subgraph");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (int w : out_[vertices[i]]) {
      if (index[w] >= 0) edges.push_back({static_cast<int>(i), index[w]});
    }
  }
  return Digraph(static_cast<int>(vertices.size()), edges, loops_allowed_);
}

GraphProfile Profile(const Digraph& g) {
  GraphProfile p;
  p.n = g.n();
  p.edge_count = g.EdgeCount();
  if (g.n() == 0) {
    p.oriented = true;
    return p;
  }
  p.min_semidegree = g.n();
  bool regular = true;
  int d = g.OutDegree(0);
  p.oriented = !g.HasLoops();
  for (int v = 0; v < g.n(); ++v) {
    int lo = std::min(g.OutDegree(v), g.InDegree(v));
    int hi = std::max(g.OutDegree(v), g.InDegree(v));
    p.min_semidegree = std::min(p.min_semidegree, lo);
    p.max_semidegree = std::max(p.max_semidegree, hi);
    if (lo != d || hi != d) regular = false;
    if (p.oriented) {
      for (int w : g.Out(v)) {
        if (g.HasEdge(w, v)) {
          p.oriented = false;
          break;
        }
      }
    }
  }
  if (regular) p.regular_degree = d;
  return p;
}

std::vector<Edge> EdgesBetween(const Digraph& g, const VertexSet& a,
                               const VertexSet& b) {
  if (a.universe() != g.n() || b.universe() != g.n()) {
    throw InputError("vertex set universe does not match graph");
  }
  std::vector<Edge> out;
  a.ForEach([&](int u) {
    for (int v : g.Out(u)) {
      if (b.Contains(v)) out.push_back({u, v});
    }
  });
  return out;
}

int64_t CountEdgesBetween(const Digraph& g, const VertexSet& a,
                          const VertexSet& b) {
  if (a.universe() != g.n() || b.universe() != g.n()) {
    throw InputError("vertex set universe does not match graph");
  }
  int64_t total = 0;
  a.ForEach([&](int u) { total += g.OutSet(u).CountCommon(b); });
  return total;
}

Check IsPathSystem(const Digraph& g, const std::vector<Edge>& edges) {
  std::vector<int> next(g.n(), -1), prev(g.n(), -1);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= g.n() || e.to < 0 || e.to >= g.n() ||
        !g.HasEdge(e.from, e.to)) {
      throw InputError("edge (" + std::to_string(e.from) + "," +
                       std::to_string(e.to) + ") is not in the graph");
    }
    if (e.from == e.to) {
      return {false, "loop at " + std::to_string(e.from)};
    }
    if (next[e.from] != -1) {
      return {false, "vertex " + std::to_string(e.from) + " has out-degree 2"};
    }
    if (prev[e.to] != -1) {
      return {false, "vertex " + std::to_string(e.to) + " has in-degree 2"};
    }
    next[e.from] = e.to;
    prev[e.to] = e.from;
  }
  // With all degrees at most one, the edges form paths and cycles. A cycle
  // has no start vertex, so count vertices reachable from starts.
  int covered = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (prev[v] != -1 || next[v] == -1) continue;
    for (int w = v; next[w] != -1; w = next[w]) ++covered;
  }
  if (covered != static_cast<int>(edges.size())) {
    for (int v = 0; v < g.n(); ++v) {
      if (next[v] == -1) continue;
      int w = v;
      while (prev[w] != -1 && prev[w] != v) w = prev[w];
      if (prev[w] == v) {
        return {false, "cycle through vertex " + std::to_string(v)};
      }
    }
    return {false, "cycle"};
  }
  return {true, ""};
}

bool HasDirectedCycle(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw InputError("edge endpoint out of range");
    }
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  // Kahn's algorithm: every vertex is peeled iff the graph is acyclic.
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int peeled = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++peeled;
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return peeled != n;
}

std::vector<std::vector<int>> PathDecomposition(const std::vector<Edge>& edges) {
  int n = 0;
  for (const Edge& e : edges) n = std::max({n, e.from + 1, e.to + 1});
  std::vector<int> next(n, -1), prev(n, -1);
  for (const Edge& e : edges) {
    next[e.from] = e.to;
    prev[e.to] = e.from;
  }
  std::vector<std::vector<int>> paths;
  for (int v = 0; v < n; ++v) {
    if (prev[v] != -1 || next[v] == -1) continue;
    std::vector<int> path{v};
    for (int w = next[v]; w != -1; w = next[w]) path.push_back(w);
    paths.push_back(std::move(path));
  }
  return paths;
}

Check VerifyHamiltonCycle(const Digraph& g, const std::vector<int>& cycle) {
  int n = g.n();
  if (static_cast<int>(cycle.size()) != n) {
    return {false, "cycle has " + std::to_string(cycle.size()) +
                       " vertices, graph has " + std::to_string(n)};
  }
  if (n == 0) return {false, "empty graph"};
  std::vector<char> seen(n, 0);
  for (int v : cycle) {
    if (v < 0 || v >= n) return {false, "vertex out of range"};
    if (seen[v]) return {false, "vertex " + std::to_string(v) + " repeated"};
    seen[v] = 1;
  }
  if (n == 1) {
    if (g.HasEdge(cycle[0], cycle[0])) return {true, ""};
    return {false, "single vertex without loop"};
  }
  for (int i = 0; i < n; ++i) {
    int u = cycle[i];
    int v = cycle[(i + 1) % n];
    if (!g.HasEdge(u, v)) {
      return {false, "missing edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")"};
    }
  }
  return {true, ""};
}

Digraph DirectedCycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Digraph(n, edges, n == 1);
}

Digraph CompleteDigraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return Digraph(n, edges);
}

}  // namespace hamlab
