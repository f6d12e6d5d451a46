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

#ifndef HAMLAB_DIGRAPH_HPP_
#define HAMLAB_DIGRAPH_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hamlab {

// Subset of [0, n) stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet Of(int n, const std::vector<int>& members);
  static VertexSet Full(int n);

  int universe() const { return n_; }
  void Insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void Erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool Contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & uint64_t{1};
  }
  int Size() const;
  bool Empty() const;
  std::vector<int> Members() const;
  int CountCommon(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;
  bool IsSubsetOf(const VertexSet& other) const;
  // Smallest member, or -1 if empty.
  int First() const;

  const std::vector<uint64_t>& words() const { return words_; }

  template <typename F>
  void ForEach(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable directed graph on vertices [0, n) with both adjacency directions
// materialised. Loops are representable when `loops_allowed` is set.
class Digraph {
 public:
  Digraph() = default;
  // Throws InputError on out-of-range ids, repeated edges, or loops when
  // loops are not allowed.
  Digraph(int n, const std::vector<Edge>& edges, bool loops_allowed = false);

  int n() const { return n_; }
  bool loops_allowed() const { return loops_allowed_; }
  const std::vector<int>& Out(int v) const { return out_[v]; }
  const std::vector<int>& In(int v) const { return in_[v]; }
  const VertexSet& OutSet(int v) const { return out_set_[v]; }
  const VertexSet& InSet(int v) const { return in_set_[v]; }
  int OutDegree(int v) const { return static_cast<int>(out_[v].size()); }
  int InDegree(int v) const { return static_cast<int>(in_[v].size()); }
  bool HasEdge(int u, int v) const { return out_set_[u].Contains(v); }
  int64_t EdgeCount() const { return edge_count_; }
  bool HasLoops() const;

  // All edges sorted by (from, to).
  std::vector<Edge> Edges() const;
  Digraph Transposed() const;
  Digraph WithoutLoops() const;
  // Vertex i of the result is vertices[i] of this graph.
  Digraph Induced(const std::vector<int>& vertices) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.loops_allowed_ == b.loops_allowed_ &&
           a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  bool loops_allowed_ = false;
  int64_t edge_count_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<VertexSet> out_set_;
  std::vector<VertexSet> in_set_;
};

struct GraphProfile {
  int n = 0;
  std::optional<int> regular_degree;
  bool oriented = false;
  int min_semidegree = 0;
  int max_semidegree = 0;
  int64_t edge_count = 0;
};

GraphProfile Profile(const Digraph& g);

// Edges with tail in `a` and head in `b`, sorted.
std::vector<Edge> EdgesBetween(const Digraph& g, const VertexSet& a,
                               const VertexSet& b);
int64_t CountEdgesBetween(const Digraph& g, const VertexSet& a,
                          const VertexSet& b);

struct Check {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// True iff every vertex has at most one in- and one out-edge within `edges`
// and the edges contain no directed cycle. Throws InputError when an edge is
// missing from `g`.
Check IsPathSystem(const Digraph& g, const std::vector<Edge>& edges);

// True iff the edges (on vertices [0, n)) contain a directed cycle.
bool HasDirectedCycle(int n, const std::vector<Edge>& edges);

// Maximal directed paths of a valid path system as vertex sequences, ordered
// by their first vertex.
std::vector<std::vector<int>> PathDecomposition(const std::vector<Edge>& edges);

// True iff `cycle` lists every vertex exactly once and consecutive vertices
// (cyclically) are joined by edges. Loops never count, except that a single
// vertex with a loop is its own Hamilton cycle.
Check VerifyHamiltonCycle(const Digraph& g, const std::vector<int>& cycle);

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph DirectedCycle(int n);
// Every ordered pair of distinct vertices is an edge.
Digraph CompleteDigraph(int n);

}  // namespace hamlab

#endif  // HAMLAB_DIGRAPH_HPP_
