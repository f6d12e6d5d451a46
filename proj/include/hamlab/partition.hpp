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

#ifndef HAMLAB_PARTITION_HPP_
#define HAMLAB_PARTITION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/expander.hpp"
#include "hamlab/rational.hpp"

namespace hamlab {

// Partition of [0, n) into k*k cells. Rows and columns are 0-based here;
// cell (i, j) has index i*k + j. External formats use 1-based labels.
class Partition {
 public:
  Partition() = default;
  // labels[v] is the cell index of v. Throws InputError on bad labels.
  Partition(int k, std::vector<int> labels);
  // cells[i*k + j] lists the members of cell (i, j).
  static Partition FromCells(int n, int k,
                             const std::vector<std::vector<int>>& cells);

  int k() const { return k_; }
  int n() const { return static_cast<int>(labels_.size()); }
  int Cell(int v) const { return labels_[v]; }
  int Row(int v) const { return labels_[v] / k_; }
  int Col(int v) const { return labels_[v] % k_; }
  const std::vector<int>& labels() const { return labels_; }

  VertexSet CellSet(int i, int j) const;
  VertexSet RowSet(int i) const;
  VertexSet ColSet(int j) const;
  std::vector<int> CellMembers(int i, int j) const;
  int CellSize(int i, int j) const;
  int RowSize(int i) const;
  int ColSize(int j) const;

  void Move(int v, int i, int j) { labels_[v] = i * k_ + j; }
  // Renames row and column index a to index_map[a].
  Partition Relabeled(const std::vector<int>& index_map) const;
  // The partition of the transposed graph: cell (i, j) becomes (j, i).
  Partition Transposed() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  int k_ = 0;
  std::vector<int> labels_;
};

// u->v is good iff row(u) == col(v).
inline bool IsGoodEdge(const Partition& p, const Edge& e) {
  return p.Row(e.from) == p.Col(e.to);
}

std::vector<Edge> BadEdges(const Digraph& g, const Partition& p);
int64_t BadEdgeCount(const Digraph& g, const Partition& p);

struct PartitionParams {
  Rational tau;
  Rational gamma;
};

struct PartitionReport {
  int64_t bad_edge_count = 0;
  std::vector<int> row_sizes;
  std::vector<int> col_sizes;
  // row_sizes[i] - col_sizes[i].
  std::vector<int> imbalance;
  bool bad_edges_ok = false;  // at most gamma*n^2 bad edges
  bool sizes_ok = false;      // every row and column union >= tau*n
  // For regular graphs: d*(|V_i*| - |V_*i|) equals the net bad-edge flow
  // out of row i, for every i.
  std::optional<bool> identity_holds;
  bool valid() const { return bad_edges_ok && sizes_ok; }
};

PartitionReport ValidatePartition(const Digraph& g, const Partition& p,
                                  const PartitionParams& params);

// Sum over j != i of e(V_i*, V_*j) - e(V_j*, V_*i), for each row i.
std::vector<int64_t> NetBadFlow(const Digraph& g, const Partition& p);

// k = 2 partition with V11 = S & RN, V12 = S - RN, V21 = RN - S and V22 the
// rest. Throws InputError when the witness fails to re-verify.
Partition PartitionFromWitness(const Digraph& g, const ExpansionWitness& w,
                               const ExpansionParams& params);

// Merges index groups (0-based, disjoint, covering [0, k)) into new indices.
Partition Coarsen(const Partition& p,
                  const std::vector<std::vector<int>>& groups);

// A single-vertex move that would reduce bad edges but was blocked by the
// size floor.
struct BlockedMove {
  int vertex = 0;
  int to_row = 0;
  int to_col = 0;
  int gain = 0;
};

struct ExtremalizeResult {
  Partition partition;
  int moves = 0;
  std::vector<BlockedMove> blocked;
};

// Applies bad-edge-reducing single-vertex moves (within the row or within
// the column) until none remains, never letting a row or column union drop
// below tau*n. Vertices are scanned by id and targets by (row, col); the
// first strictly improving move is applied and the scan restarts. Throws
// InputError when the input already violates the size floor.
ExtremalizeResult Extremalize(const Digraph& g, const Partition& p,
                              const Rational& tau);

// Change in bad-edge count if v moved to cell (i, j) (negative = better).
int MoveDelta(const Digraph& g, const Partition& p, int v, int i, int j);

std::string CellName(int i, int j);  // "11" for (0, 0)

}  // namespace hamlab

#endif  // HAMLAB_PARTITION_HPP_
