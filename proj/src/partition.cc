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

#include "hamlab/partition.hpp"

#include <algorithm>
#include <string>

#include "hamlab/errors.hpp"

namespace hamlab {

Partition::Partition(int k, std::vector<int> labels)
    : k_(k), labels_(std::move(labels)) {
  if (k < 1) throw InputError("partition order must be positive");
  for (int c : labels_) {
    if (c < 0 || c >= k * k) throw InputError("cell label out of range");
  }
}

Partition Partition::FromCells(int n, int k,
                               const std::vector<std::vector<int>>& cells) {
  if (static_cast<int>(cells.size()) != k * k) {
    throw InputError("expected k*k cells");
  }
  std::vector<int> labels(n, -1);
  for (int c = 0; c < k * k; ++c) {
    for (int v : cells[c]) {
      if (v < 0 || v >= n) throw InputError("cell member out of range");
      if (labels[v] != -1) {
        throw InputError("vertex " + std::to_string(v) + " in two cells");
      }
      labels[v] = c;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (labels[v] == -1) {
      throw InputError("vertex " + std::to_string(v) + " in no cell");
    }
  }
  return Partition(k, labels);
}

VertexSet Partition::CellSet(int i, int j) const {
  VertexSet s(n());
  for (int v = 0; v < n(); ++v) {
    if (labels_[v] == i * k_ + j) s.Insert(v);
  }
  return s;
}

VertexSet Partition::RowSet(int i) const {
  VertexSet s(n());
  for (int v = 0; v < n(); ++v) {
    if (Row(v) == i) s.Insert(v);
  }
  return s;
}

VertexSet Partition::ColSet(int j) const {
  VertexSet s(n());
  for (int v = 0; v < n(); ++v) {
    if (Col(v) == j) s.Insert(v);
  }
  return s;
}

std::vector<int> Partition::CellMembers(int i, int j) const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v) {
    if (labels_[v] == i * k_ + j) out.push_back(v);
  }
  return out;
}

int Partition::CellSize(int i, int j) const {
  return static_cast<int>(std::count(labels_.begin(), labels_.end(), i * k_ + j));
}

int Partition::RowSize(int i) const {
  int total = 0;
  for (int v = 0; v < n(); ++v) total += Row(v) == i;
  return total;
}

int Partition::ColSize(int j) const {
  int total = 0;
  for (int v = 0; v < n(); ++v) total += Col(v) == j;
  return total;
}

Partition Partition::Relabeled(const std::vector<int>& index_map) const {
  std::vector<int> labels(n());
  for (int v = 0; v < n(); ++v) {
    labels[v] = index_map[Row(v)] * k_ + index_map[Col(v)];
  }
  return Partition(k_, labels);
}

Partition Partition::Transposed() const {
  std::vector<int> labels(n());
  for (int v = 0; v < n(); ++v) labels[v] = Col(v) * k_ + Row(v);
  return Partition(k_, labels);
}

std::vector<Edge> BadEdges(const Digraph& g, const Partition& p) {
  if (p.n() != g.n()) throw InputError("partition size does not match graph");
  std::vector<Edge> out;
  for (const Edge& e : g.Edges()) {
    if (!IsGoodEdge(p, e)) out.push_back(e);
  }
  return out;
}

int64_t BadEdgeCount(const Digraph& g, const Partition& p) {
  if (p.n() != g.n()) throw InputError("partition size does not match graph");
  int64_t total = 0;
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.Out(u)) total += p.Row(u) != p.Col(v);
  }
  return total;
}

std::vector<int64_t> NetBadFlow(const Digraph& g, const Partition& p) {
  std::vector<int64_t> flow(p.k(), 0);
  for (int u = 0; u < g.n(); ++u) {
    for (int v : g.Out(u)) {
      int i = p.Row(u), j = p.Col(v);
      if (i == j) continue;
      ++flow[i];  // leaves row i
      --flow[j];  // enters column j
    }
  }
  return flow;
}

PartitionReport ValidatePartition(const Digraph& g, const Partition& p,
                                  const PartitionParams& params) {
  if (p.n() != g.n()) throw InputError("partition size does not match graph");
  PartitionReport r;
  int n = g.n();
  r.bad_edge_count = BadEdgeCount(g, p);
  // |B| <= gamma*n^2, evaluated exactly.
  r.bad_edges_ok = !params.gamma.TimesLess(static_cast<int64_t>(n) * n,
                                           r.bad_edge_count);
  r.sizes_ok = true;
  for (int i = 0; i < p.k(); ++i) {
    r.row_sizes.push_back(p.RowSize(i));
    r.col_sizes.push_back(p.ColSize(i));
    r.imbalance.push_back(r.row_sizes.back() - r.col_sizes.back());
    if (!params.tau.TimesLeq(n, r.row_sizes.back()) ||
        !params.tau.TimesLeq(n, r.col_sizes.back())) {
      r.sizes_ok = false;
    }
  }
  GraphProfile profile = Profile(g);
  if (profile.regular_degree) {
    std::vector<int64_t> flow = NetBadFlow(g, p);
    bool holds = true;
    for (int i = 0; i < p.k(); ++i) {
      if (static_cast<int64_t>(*profile.regular_degree) * r.imbalance[i] !=
          flow[i]) {
        holds = false;
      }
    }
    r.identity_holds = holds;
  }
  return r;
}

Partition PartitionFromWitness(const Digraph& g, const ExpansionWitness& w,
                               const ExpansionParams& params) {
  if (!IsWitness(g, w, params)) throw InputError("stale expansion witness");
  VertexSet rn = RobustOutNeighbourhood(g, w.set, params.nu);
  std::vector<int> labels(g.n());
  for (int v = 0; v < g.n(); ++v) {
    bool in_s = w.set.Contains(v), in_rn = rn.Contains(v);
    int row = in_s ? 0 : 1;
    int col = in_rn ? 0 : 1;
    labels[v] = row * 2 + col;
  }
  return Partition(2, labels);
}

Partition Coarsen(const Partition& p,
                  const std::vector<std::vector<int>>& groups) {
  std::vector<int> group_of(p.k(), -1);
  for (size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw InputError("empty index group");
    for (int i : groups[g]) {
      if (i < 0 || i >= p.k() || group_of[i] != -1) {
        throw InputError("index groups must partition the index range");
      }
      group_of[i] = static_cast<int>(g);
    }
  }
  for (int g : group_of) {
    if (g == -1) throw InputError("index groups must cover the index range");
  }
  int k = static_cast<int>(groups.size());
  std::vector<int> labels(p.n());
  for (int v = 0; v < p.n(); ++v) {
    labels[v] = group_of[p.Row(v)] * k + group_of[p.Col(v)];
  }
  return Partition(k, labels);
}

int MoveDelta(const Digraph& g, const Partition& p, int v, int i, int j) {
  int old_row = p.Row(v), old_col = p.Col(v);
  int delta = 0;
  for (int w : g.Out(v)) {
    int w_col = (w == v) ? old_col : p.Col(w);
    int new_w_col = (w == v) ? j : p.Col(w);
    delta += (i != new_w_col) - (old_row != w_col);
  }
  for (int u : g.In(v)) {
    if (u == v) continue;  // the loop was counted with the out-edges
    delta += (p.Row(u) != j) - (p.Row(u) != old_col);
  }
  return delta;
}

ExtremalizeResult Extremalize(const Digraph& g, const Partition& p,
                              const Rational& tau) {
  if (p.n() != g.n()) throw InputError("partition size does not match graph");
  int n = g.n(), k = p.k();
  ExtremalizeResult result{p, 0, {}};
  Partition& cur = result.partition;
  std::vector<int> rows(k), cols(k);
  for (int i = 0; i < k; ++i) {
    rows[i] = cur.RowSize(i);
    cols[i] = cur.ColSize(i);
    if (!tau.TimesLeq(n, rows[i]) || !tau.TimesLeq(n, cols[i])) {
      throw InputError("partition violates the size floor");
    }
  }
  auto floor_ok = [&](int size_after) { return tau.TimesLeq(n, size_after); };
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n && !moved; ++v) {
      int i = cur.Row(v), j = cur.Col(v);
      for (int a = 0; a < k && !moved; ++a) {
        for (int b = 0; b < k && !moved; ++b) {
          if ((a == i) == (b == j)) continue;  // exactly one index changes
          if (MoveDelta(g, cur, v, a, b) >= 0) continue;
          bool allowed = a != i ? floor_ok(rows[i] - 1) : floor_ok(cols[j] - 1);
          if (!allowed) continue;
          cur.Move(v, a, b);
          if (a != i) {
            --rows[i];
            ++rows[a];
          } else {
            --cols[j];
            ++cols[b];
          }
          ++result.moves;
          moved = true;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    int i = cur.Row(v), j = cur.Col(v);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if ((a == i) == (b == j)) continue;
        int delta = MoveDelta(g, cur, v, a, b);
        if (delta < 0) result.blocked.push_back({v, a, b, -delta});
      }
    }
  }
  return result;
}

std::string CellName(int i, int j) {
  return std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace hamlab
