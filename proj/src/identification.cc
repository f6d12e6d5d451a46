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

#include "hamlab/identification.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "hamlab/balancer.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/errors.hpp"

namespace hamlab {
namespace {

void RequireFourPartition(const Digraph& g, const Partition& p2) {
  if (p2.k() != 2) throw InputError("expected a 4-partition");
  if (p2.n() != g.n()) throw InputError("partition size does not match graph");
}

// Cells holding the labelled vertices: out_map lands in (i, 1-i) and
// in_map in (1-i, i).
std::pair<int, int> LabelCells(int i) {
  return {i * 2 + (1 - i), (1 - i) * 2 + i};
}

std::string OracleDetail(const OracleResult& o) {
  return o.method + ", " + std::to_string(o.nodes) + " nodes";
}

class Solver {
 public:
  Solver(const DriverConfig& config, Trace& trace)
      : config_(config), trace_(trace) {}

  OracleResult Run(const Digraph& j, const std::string& stage) {
    std::string detail;
    if (config_.expander_diagnostic_max_n > 0 &&
        j.n() <= std::min(config_.expander_diagnostic_max_n, 22) && j.n() >= 2) {
      try {
        WitnessSearch w = FindWitness(j, config_.expansion, WitnessMode::kExact,
                                      0, config_.seed, 22);
        detail = w.witness ? "expansion witness of size " +
                                 std::to_string(w.witness->set.Size()) + "; "
                           : "robust outexpander; ";
      } catch (const InputError&) {
        detail = "";
      }
    }
    OracleResult o = FindHamiltonExact(j, config_.oracle_budget);
    trace_.push_back({stage, j.n(), j.EdgeCount(), OutcomeName(o.outcome),
                      detail + OracleDetail(o)});
    return o;
  }

 private:
  const DriverConfig& config_;
  Trace& trace_;
};

}  // namespace

BipartiteView MakeBipartiteView(const Digraph& g, const Partition& p2, int i) {
  RequireFourPartition(g, p2);
  if (i < 0 || i > 1) throw InputError("block index must be 0 or 1");
  BipartiteView view;
  view.i = i;
  VertexSet left = p2.RowSet(i), right = p2.ColSet(i);
  view.left = left.Members();
  view.right = right.Members();
  view.edges = EdgesBetween(g, left, right);
  return view;
}

void ValidatePair(const Partition& p2, const ProperPair& pair) {
  if (p2.k() != 2) throw InputError("expected a 4-partition");
  if (pair.i < 0 || pair.i > 1) throw InputError("pair index must be 0 or 1");
  auto [out_cell, in_cell] = LabelCells(pair.i);
  std::vector<int> out_cell_members = p2.CellMembers(out_cell / 2, out_cell % 2);
  std::vector<int> in_cell_members = p2.CellMembers(in_cell / 2, in_cell % 2);
  if (pair.t <= 0 || static_cast<int>(out_cell_members.size()) != pair.t ||
      static_cast<int>(in_cell_members.size()) != pair.t) {
    throw InputError("proper pairs need |V12| = |V21| = t > 0");
  }
  if (pair.diag != p2.CellMembers(pair.i, pair.i)) {
    throw InputError("pair diagonal does not match the partition");
  }
  std::vector<int> out = pair.out_map, in = pair.in_map;
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  if (out != out_cell_members || in != in_cell_members) {
    throw InputError("pair maps are not bijections onto the off-diagonal cells");
  }
}

ProperPair CanonicalPair(const Partition& p2, int i) {
  if (p2.k() != 2) throw InputError("expected a 4-partition");
  if (i < 0 || i > 1) throw InputError("pair index must be 0 or 1");
  std::vector<int> v12 = p2.CellMembers(0, 1), v21 = p2.CellMembers(1, 0);
  if (v12.size() != v21.size() || v12.empty()) {
    throw InputError("proper pairs need |V12| = |V21| > 0");
  }
  ProperPair pair;
  pair.i = i;
  pair.t = static_cast<int>(v12.size());
  pair.diag = p2.CellMembers(i, i);
  pair.out_map = i == 0 ? v12 : v21;
  pair.in_map = i == 0 ? v21 : v12;
  return pair;
}

IdentificationGraph Identify(const Digraph& g, const Partition& p2,
                             const ProperPair& pair, bool drop_loops) {
  RequireFourPartition(g, p2);
  ValidatePair(p2, pair);
  std::vector<int> out_inv(g.n(), -1), in_inv(g.n(), -1);
  for (int x = 0; x < pair.size(); ++x) {
    out_inv[pair.OutImage(x)] = x;
    in_inv[pair.InImage(x)] = x;
  }
  IdentificationGraph result;
  std::vector<Edge> edges;
  for (const Edge& e : g.Edges()) {
    int x = out_inv[e.from], y = in_inv[e.to];
    if (x == -1 || y == -1) continue;
    if (x == y) {
      ++result.loops;
      if (drop_loops) continue;
    }
    edges.push_back({x, y});
    result.correspondence.push_back({{x, y}, e});
  }
  std::sort(result.correspondence.begin(), result.correspondence.end());
  result.graph = Digraph(pair.size(), edges, !drop_loops);
  return result;
}

LiftResult LiftHamilton(const Digraph& g, const Partition& p2,
                        const ProperPair& pair1, const Digraph& j1,
                        const std::vector<int>& cycle1) {
  RequireFourPartition(g, p2);
  ValidatePair(p2, pair1);
  if (pair1.i != 0) throw InputError("lifting starts from the index-0 pair");
  if (j1.n() != pair1.size()) throw InputError("graph does not match the pair");
  Check c = VerifyHamiltonCycle(j1, cycle1);
  if (!c) throw InputError("not a Hamilton cycle of the identification graph: " + c.reason);
  int t = pair1.t;
  auto first = std::find_if(cycle1.begin(), cycle1.end(),
                            [t](int x) { return x < t; });
  std::vector<int> cyc(first, cycle1.end());
  cyc.insert(cyc.end(), cycle1.begin(), first);

  LiftResult lift;
  lift.path_of_label.assign(t, {});
  for (int x : cyc) {
    if (x < t) lift.label_order.push_back(x);
  }
  size_t pos = 0;
  for (int r = 0; r < t; ++r) {
    int label = lift.label_order[r];
    int next = lift.label_order[(r + 1) % t];
    std::vector<int> path{pair1.out_map[label]};
    for (++pos; pos < cyc.size() && cyc[pos] >= t; ++pos) {
      path.push_back(pair1.diag[cyc[pos] - t]);
    }
    path.push_back(pair1.in_map[next]);
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      if (!g.HasEdge(path[k], path[k + 1])) {
        throw std::logic_error("lifted path uses a missing edge");
      }
    }
    lift.path_of_label[label] = std::move(path);
  }
  ProperPair& pair2 = lift.pair2;
  pair2.i = 1;
  pair2.t = t;
  pair2.diag = p2.CellMembers(1, 1);
  pair2.out_map.assign(t, -1);
  pair2.in_map.assign(t, -1);
  for (int r = 0; r < t; ++r) {
    int label = lift.label_order[r];
    int next = lift.label_order[(r + 1) % t];
    pair2.out_map[label] = pair1.in_map[next];
    pair2.in_map[label] = pair1.out_map[label];
  }
  ValidatePair(p2, pair2);
  return lift;
}

std::vector<int> Splice(const Digraph& g, const LiftResult& lift,
                        const std::vector<int>& cycle2) {
  const ProperPair& pair2 = lift.pair2;
  std::vector<int> out;
  out.reserve(g.n());
  for (int x : cycle2) {
    if (x < 0 || x >= pair2.size()) throw InputError("cycle vertex out of range");
    if (x < pair2.t) {
      const auto& path = lift.path_of_label[x];
      out.insert(out.end(), path.begin(), path.end());
    } else {
      out.push_back(pair2.diag[x - pair2.t]);
    }
  }
  Check c = VerifyHamiltonCycle(g, out);
  if (!c) throw std::logic_error("spliced cycle fails verification: " + c.reason);
  return out;
}

DriverResult HamiltonFromFourPartition(const Digraph& g, const Partition& p2,
                                       const DriverConfig& config) {
  RequireFourPartition(g, p2);
  DriverResult result;
  Solver solver(config, result.trace);
  ProperPair pair1 = CanonicalPair(p2, 0);
  IdentificationGraph j1 = Identify(g, p2, pair1);
  OracleResult o1 = solver.Run(j1.graph, "identify-1");
  if (o1.outcome != Outcome::kFound) return result;
  LiftResult lift = LiftHamilton(g, p2, pair1, j1.graph, o1.cycle);
  result.trace.push_back({"lift", g.n(), g.EdgeCount(), "ok",
                          std::to_string(pair1.t) + " lifted paths"});
  IdentificationGraph j2 = Identify(g, p2, lift.pair2);
  OracleResult o2 = solver.Run(j2.graph, "identify-2");
  if (o2.outcome != Outcome::kFound) return result;
  result.cycle = Splice(g, lift, o2.cycle);
  result.outcome = Outcome::kFound;
  result.trace.push_back({"splice", g.n(), g.EdgeCount(), "found", ""});
  return result;
}

int ChooseIsolatedIndex(const Partition& p3, const Rational& tau) {
  if (p3.k() != 3) throw InputError("expected a 9-partition");
  int n = p3.n();
  std::array<bool, 3> size_ok{}, cross_ok{};
  for (int c = 0; c < 3; ++c) {
    int a = c == 0 ? 1 : 0;
    int b = c == 2 ? 1 : 2;
    int cross = p3.CellSize(a, b) + p3.CellSize(b, a);
    int block = p3.CellSize(a, a) + p3.CellSize(b, b) + cross;
    size_ok[c] = tau.TimesLeq(n, block - p3.CellSize(c, c));
    cross_ok[c] = tau.TimesLeq(n, cross);
  }
  for (int c = 0; c < 3; ++c) {
    if (size_ok[c] && cross_ok[c]) return c;
  }
  for (int c = 0; c < 3; ++c) {
    if (cross_ok[c]) return c;
  }
  for (int c = 0; c < 3; ++c) {
    if (size_ok[c]) return c;
  }
  return 2;
}

Partition InducedPartition(const Partition& p3, const ProperPair& pair2) {
  if (p3.k() != 3) throw InputError("expected a 9-partition");
  std::vector<int> labels(pair2.size());
  for (int x = 0; x < pair2.size(); ++x) {
    int out = pair2.OutImage(x), in = pair2.InImage(x);
    int i = p3.Row(out), j = p3.Col(in);
    if (i == 2 || j == 2) {
      throw InputError("pair does not match the coarsened partition");
    }
    labels[x] = i * 2 + j;
  }
  return Partition(2, labels);
}

DriverResult HamiltonFromNinePartition(const Digraph& g, const Partition& p3,
                                       const DriverConfig& config) {
  if (p3.k() != 3) throw InputError("expected a 9-partition");
  if (p3.n() != g.n()) throw InputError("partition size does not match graph");
  GraphProfile profile = Profile(g);
  if (!profile.regular_degree || !profile.oriented) {
    throw InputError("the nine-partition driver needs a regular oriented graph");
  }
  DriverResult result;
  Solver solver(config, result.trace);
  auto fallback = [&](const std::string& why) {
    result.trace.push_back({"fallback", g.n(), g.EdgeCount(), "oracle", why});
    OracleResult o = solver.Run(g, "oracle");
    result.outcome = o.outcome;
    result.cycle = o.cycle;
    result.fallback = true;
    return result;
  };

  try {
    int c = ChooseIsolatedIndex(p3, config.tau);
    std::vector<int> index_map(3);
    for (int a = 0, next = 0; a < 3; ++a) index_map[a] = a == c ? 2 : next++;
    Partition p = p3.Relabeled(index_map);
    result.trace.push_back({"isolate", g.n(), g.EdgeCount(), "ok",
                            "index " + std::to_string(c + 1) + " isolated"});

    BalanceResult bal = BalanceNine(g, p, config.seed);
    result.trace.push_back({"balance", g.n(), g.EdgeCount(), "ok",
                            bal.route + ", " + std::to_string(bal.q.size()) +
                                " edges"});
    Contraction con = Contract(g, p, bal.q);
    for (int i = 0; i < 3; ++i) {
      if (con.partition.RowSize(i) != con.partition.ColSize(i)) {
        throw std::logic_error("contraction left the partition unbalanced");
      }
    }
    const Digraph& h = con.graph;
    result.trace.push_back({"contract", h.n(), h.EdgeCount(), "ok",
                            std::to_string(con.record.paths.size()) + " paths"});

    Partition w = Coarsen(con.partition, {{2}, {0, 1}});
    if (w.CellSize(0, 1) == 0) {
      return fallback("coarsened partition has empty off-diagonal cells");
    }
    ProperPair pair1 = CanonicalPair(w, 0);
    IdentificationGraph j1 = Identify(h, w, pair1);
    OracleResult o1 = solver.Run(j1.graph, "identify-1");
    if (o1.outcome != Outcome::kFound) {
      return fallback("first identification graph has no known Hamilton cycle");
    }
    LiftResult lift = LiftHamilton(h, w, pair1, j1.graph, o1.cycle);
    IdentificationGraph j2 = Identify(h, w, lift.pair2);
    Partition z = InducedPartition(con.partition, lift.pair2);
    std::vector<int> cycle2;
    if (z.CellSize(0, 1) == z.CellSize(1, 0) && z.CellSize(0, 1) > 0) {
      DriverResult sub = HamiltonFromFourPartition(j2.graph, z, config);
      for (StageRecord rec : sub.trace) {
        rec.stage = "inner/" + rec.stage;
        result.trace.push_back(std::move(rec));
      }
      if (sub.outcome == Outcome::kFound) cycle2 = sub.cycle;
    } else {
      result.trace.push_back({"inner", j2.graph.n(), j2.graph.EdgeCount(),
                              "skipped", "induced partition is not balanced"});
    }
    if (cycle2.empty()) {
      OracleResult o2 = solver.Run(j2.graph, "identify-2");
      if (o2.outcome != Outcome::kFound) {
        return fallback("second identification graph has no known Hamilton cycle");
      }
      cycle2 = o2.cycle;
    }
    std::vector<int> contracted_cycle = Splice(h, lift, cycle2);
    result.cycle = ExpandCycle(g, h, con.record, contracted_cycle);
    result.outcome = Outcome::kFound;
    result.trace.push_back({"expand", g.n(), g.EdgeCount(), "found", ""});
    return result;
  } catch (const HypothesisViolation& e) {
    return fallback(e.what());
  }
}

}  // namespace hamlab
