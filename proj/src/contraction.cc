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

#include "hamlab/contraction.hpp"

#include <stdexcept>

#include "hamlab/errors.hpp"

namespace hamlab {

Contraction Contract(const Digraph& g, const Partition& p,
                     const std::vector<Edge>& q) {
  if (p.n() != g.n()) throw InputError("partition size does not match graph");
  Check ps = IsPathSystem(g, q);
  if (!ps) throw InputError("cannot contract: " + ps.reason);
  int n = g.n();
  std::vector<std::vector<int>> paths = PathDecomposition(q);
  std::vector<char> on_path(n, 0);
  for (const auto& path : paths) {
    for (int v : path) on_path[v] = 1;
  }
  Contraction out;
  ContractionRecord& rec = out.record;
  rec.original_n = n;
  // head_id: new id of v when v is the start of its block (receives
  // in-edges); tail_id: new id of v when v ends its block (sends out-edges).
  std::vector<int> head_id(n, -1), tail_id(n, -1);
  std::vector<int> labels;
  for (int v = 0; v < n; ++v) {
    if (on_path[v]) continue;
    int id = static_cast<int>(rec.origin.size());
    head_id[v] = tail_id[v] = id;
    rec.origin.push_back({v});
    labels.push_back(p.Cell(v));
  }
  for (const auto& path : paths) {
    int id = static_cast<int>(rec.origin.size());
    int u = path.front(), v = path.back();
    head_id[u] = id;
    tail_id[v] = id;
    int cell = p.Row(v) * p.k() + p.Col(u);
    rec.origin.push_back(path);
    rec.paths.push_back({id, path, p.Cell(u), cell});
    labels.push_back(cell);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.Edges()) {
    int x = tail_id[e.from], y = head_id[e.to];
    if (x == -1 || y == -1) continue;
    if (x == y && on_path[e.from]) {
      ++rec.dropped_loops;
      continue;
    }
    edges.push_back({x, y});
  }
  int m = static_cast<int>(rec.origin.size());
  out.graph = Digraph(m, edges, g.loops_allowed());
  out.partition = Partition(p.k(), labels);
  return out;
}

std::vector<int> ExpandCycle(const Digraph& original, const Digraph& contracted,
                             const ContractionRecord& record,
                             const std::vector<int>& cycle) {
  if (contracted.n() != static_cast<int>(record.origin.size()) ||
      original.n() != record.original_n) {
    throw InputError("contraction record does not match the graphs");
  }
  Check c = VerifyHamiltonCycle(contracted, cycle);
  if (!c) throw InputError("not a Hamilton cycle of the contracted graph: " + c.reason);
  std::vector<int> out;
  out.reserve(original.n());
  for (int x : cycle) {
    const auto& block = record.origin[x];
    out.insert(out.end(), block.begin(), block.end());
  }
  Check e = VerifyHamiltonCycle(original, out);
  if (!e) throw std::logic_error("expanded cycle fails verification: " + e.reason);
  return out;
}

}  // namespace hamlab
