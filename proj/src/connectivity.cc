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

#include "hamlab/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <vector>

#include "hamlab/errors.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

// Residual network for unit-capacity flows on the split graph.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void AddArc(int u, int v, int cap) {
    arcs_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, 0, head_[v]});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
    initial_.push_back(cap);
    initial_.push_back(0);
  }

  void Reset() {
    for (size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = initial_[i];
  }

  // Pushes augmenting paths one at a time, stopping at `limit`.
  int MaxFlow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int u = queue.front();
        queue.pop();
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          int v = arcs_[a].to;
          if (arcs_[a].cap > 0 && via[v] == -1) {
            via[v] = a;
            queue.push(v);
          }
        }
      }
      if (via[t] == -1) break;
      for (int v = t; v != s;) {
        int a = via[v];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> initial_;
};

bool BipartitionHasPair(const Digraph& g, const VertexSet& side) {
  VertexSet other = VertexSet::Full(g.n()) - side;
  int64_t back = CountEdgesBetween(g, other, side);
  if (back == 0) return false;
  bool found = false;
  side.ForEach([&](int a) {
    if (found) return;
    int into_a = g.InSet(a).CountCommon(other);
    for (int b : g.Out(a)) {
      if (side.Contains(b)) continue;
      int64_t disjoint = back - into_a - g.OutSet(b).CountCommon(side) +
                         (g.HasEdge(b, a) ? 1 : 0);
      if (disjoint > 0) {
        found = true;
        return;
      }
    }
  });
  return found;
}

}  // namespace

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

int WeakComponentCount(const Digraph& g, const VertexSet& removed) {
  std::vector<char> seen(g.n(), 0);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s] || removed.Contains(s)) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      auto visit = [&](int w) {
        if (!seen[w] && !removed.Contains(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      };
      for (int w : g.Out(u)) visit(w);
      for (int w : g.In(u)) visit(w);
    }
  }
  return components;
}

bool IsStronglyConnected(const Digraph& g) {
  if (g.n() == 0) return true;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : pass == 0 ? g.Out(u) : g.In(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != g.n()) return false;
  }
  return true;
}

bool StrongKConnectivity(const Digraph& g, int k) {
  if (k < 1) throw InputError("connectivity order must be positive");
  int n = g.n();
  if (n < k + 1) return false;
  if (k == 1) return IsStronglyConnected(g);
  // Vertex v becomes v_in = 2v and v_out = 2v+1 joined by a unit arc.
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.AddArc(2 * v, 2 * v + 1, 1);
  for (int u = 0; u < n; ++u) {
    for (int v : g.Out(u)) {
      if (u != v) net.AddArc(2 * u + 1, 2 * v, 1);
    }
  }
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || g.HasEdge(s, t)) continue;
      net.Reset();
      if (net.MaxFlow(2 * s + 1, 2 * t, k) < k) return false;
    }
  }
  return true;
}

std::optional<std::pair<Edge, Edge>> FindNonIncidentCrossingPair(
    const Digraph& g, const VertexSet& side) {
  VertexSet other = VertexSet::Full(g.n()) - side;
  std::vector<Edge> forward = EdgesBetween(g, side, other);
  std::vector<Edge> backward = EdgesBetween(g, other, side);
  for (const Edge& ab : forward) {
    for (const Edge& cd : backward) {
      if (cd.from != ab.to && cd.to != ab.from) {
        return std::make_pair(ab, cd);
      }
    }
  }
  return std::nullopt;
}

WellConnectedness StronglyWellConnectedExact(const Digraph& g) {
  int n = g.n();
  if (n > 20) throw InputError("exact well-connectivity check needs n <= 20");
  WellConnectedness result;
  if (n < 4) {
    result.verdict = Verdict::kYes;  // no admissible bipartition
    return result;
  }
  std::vector<uint32_t> out(n, 0), in(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.Out(u)) {
      if (u == v) continue;
      out[u] |= uint32_t{1} << v;
      in[v] |= uint32_t{1} << u;
    }
  }
  uint32_t full = (uint32_t{1} << n) - 1;
  // Vertex 0 always sits in A; the condition is symmetric in A and B.
  for (uint32_t rest = 0; rest < (uint32_t{1} << (n - 1)); ++rest) {
    uint32_t a_mask = (rest << 1) | 1u;
    uint32_t b_mask = full & ~a_mask;
    if (std::popcount(a_mask) < 2 || std::popcount(b_mask) < 2) continue;
    ++result.bipartitions_checked;
    int back = 0;
    for (uint32_t bits = b_mask; bits; bits &= bits - 1) {
      back += std::popcount(out[std::countr_zero(bits)] & a_mask);
    }
    bool ok = false;
    for (uint32_t bits = a_mask; bits && !ok && back > 0; bits &= bits - 1) {
      int a = std::countr_zero(bits);
      int into_a = std::popcount(in[a] & b_mask);
      for (uint32_t heads = out[a] & b_mask; heads; heads &= heads - 1) {
        int b = std::countr_zero(heads);
        int disjoint = back - into_a - std::popcount(out[b] & a_mask) +
                       static_cast<int>((out[b] >> a) & 1u);
        if (disjoint > 0) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) {
      VertexSet side(n);
      for (int v = 0; v < n; ++v) {
        if ((a_mask >> v) & 1u) side.Insert(v);
      }
      result.verdict = Verdict::kNo;
      result.violation = side;
      return result;
    }
  }
  result.verdict = Verdict::kYes;
  return result;
}

WellConnectedness StronglyWellConnectedSampled(const Digraph& g, int samples,
                                               uint64_t seed) {
  WellConnectedness result;
  int n = g.n();
  if (n < 4) {
    result.verdict = Verdict::kUnknown;
    return result;
  }
  Rng rng(seed);
  while (result.bipartitions_checked < samples) {
    VertexSet side(n);
    for (int v = 0; v < n; ++v) {
      if (rng.Coin()) side.Insert(v);
    }
    int size = side.Size();
    if (size < 2 || n - size < 2) continue;
    ++result.bipartitions_checked;
    if (!BipartitionHasPair(g, side)) {
      result.verdict = Verdict::kNo;
      result.violation = side;
      return result;
    }
  }
  result.verdict = Verdict::kUnknown;
  return result;
}

}  // namespace hamlab
