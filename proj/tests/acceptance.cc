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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hamlab/balancer.hpp"
#include "hamlab/connectivity.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/digraph.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/identification.hpp"
#include "hamlab/matchings.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/partition.hpp"
#include "hamlab/pipeline.hpp"
#include "hamlab/random.hpp"

namespace hamlab {
namespace {

struct CriterionResult {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first reason is kept for the summary line.
class Tally {
 public:
  void Require(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    if (ok()) return "";
    return std::to_string(failures_) + " failure(s), first: " + first_;
  }

 private:
  int failures_ = 0;
  std::string first_;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Partition RandomPartition(Rng& rng, int n, int k) {
  std::vector<int> labels(n);
  for (int& c : labels) c = rng.Int(0, k * k - 1);
  return Partition(k, labels);
}

std::optional<Partition> FlooredExtremal(const Digraph& g, Rng& rng, int k,
                                         const Rational& tau) {
  try {
    return Extremalize(g, RandomPartition(rng, g.n(), k), tau).partition;
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Digraph RandomSparse(Rng& rng, int n, int max_semidegree) {
  std::vector<int> out(n, 0), in(n, 0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || rng.Int(0, 5) != 0) continue;
      if (out[u] >= max_semidegree || in[v] >= max_semidegree) continue;
      ++out[u];
      ++in[v];
      edges.push_back({u, v});
    }
  }
  return Digraph(n, edges);
}

bool IsMatching(const std::vector<Edge>& m) {
  std::set<int> used;
  for (const Edge& e : m) {
    if (!used.insert(e.from).second || !used.insert(e.to).second) return false;
  }
  return true;
}

// 1. Bridged cliques for n = 3, 4, 5.
CriterionResult BridgedCliqueSuite() {
  auto start = Clock::now();
  Tally t;
  for (int n = 3; n <= 5; ++n) {
    Digraph g = BridgedCliques(n).graph;
    std::string tag = "n=" + std::to_string(n) + ": ";
    t.Require(g.n() == 2 * n, tag + "vertex count");
    t.Require(Profile(g).regular_degree == n - 1, tag + "not (n-1)-regular");
    t.Require(StrongKConnectivity(g, 2), tag + "not strongly 2-connected");
    t.Require(StronglyWellConnectedExact(g).verdict == Verdict::kNo,
              tag + "well-connectivity not refuted");
    t.Require(HeldKarp(g).outcome == Outcome::kNotHamiltonian, tag + "Hamiltonian");
  }
  double s = Seconds(start);
  t.Require(s < 5.0, "runtime");
  return {t.ok(), t.ok() ? "3 instances, " + std::to_string(s) + " s" : t.Summary()};
}

// 2. Hub tournaments at n = 1.
CriterionResult HubSuite() {
  auto start = Clock::now();
  Tally t;
  Digraph g = HubTournaments(1).graph;
  GraphProfile p = Profile(g);
  t.Require(g.n() == 23, "vertex count");
  t.Require(p.regular_degree == 3, "not 3-regular");
  t.Require(p.oriented, "not oriented");
  WellConnectedness w = StronglyWellConnectedSampled(g, 2000, 1);
  t.Require(w.verdict != Verdict::kNo, "sampled bipartition violation");
  t.Require(w.bipartitions_checked == 2000, "sample count");
  CutCertificate c{{21, 22}, 3};
  t.Require(CertificateHolds(g, c), "hub cut certificate");
  t.Require(WeakComponentCount(g, VertexSet::Of(23, {21, 22})) == 3,
            "component count");
  double s = Seconds(start);
  t.Require(s < 2.0, "runtime");
  return {t.ok(), t.ok() ? "2000 samples clean, cut {21,22} -> 3 components, " +
                               std::to_string(s) + " s"
                         : t.Summary()};
}

// 3. Bipartite core at n = 1.
CriterionResult BipartiteCoreSuite() {
  auto start = Clock::now();
  Tally t;
  Digraph g = BipartiteCore(1).graph;
  GraphProfile p = Profile(g);
  t.Require(g.n() == 17, "vertex count");
  t.Require(p.regular_degree == 2, "not 2-regular");
  t.Require(p.oriented, "not oriented");
  t.Require(StrongKConnectivity(g, 1), "not strongly connected");
  CutCertificate c{{0, 1, 2, 3}, 5};
  t.Require(CertificateHolds(g, c), "core cut certificate");
  double s = Seconds(start);
  t.Require(s < 1.0, "runtime");
  return {t.ok(), t.ok() ? "cut {0,1,2,3} -> 5 components, " + std::to_string(s) + " s"
                         : t.Summary()};
}

// 4. Degree identity for partitions of regular digraphs.
CriterionResult PartitionIdentity() {
  auto start = Clock::now();
  Tally t;
  Rng rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    int n = rng.Int(3, 30);
    int d = rng.Int(1, n - 1);
    int k = rng.Int(2, 3);
    Digraph g = RandomRegular(n, d, false, trial);
    Partition p = RandomPartition(rng, n, k);
    std::vector<int64_t> flow = NetBadFlow(g, p);
    for (int i = 0; i < k; ++i) {
      t.Require(int64_t{d} * (p.RowSize(i) - p.ColSize(i)) == flow[i],
                "trial " + std::to_string(trial));
    }
  }
  double s = Seconds(start);
  t.Require(s < 10.0, "runtime");
  return {t.ok(), t.ok() ? "500 instances exact, " + std::to_string(s) + " s" : t.Summary()};
}

// 5. Bounded matching with high-degree sets.
CriterionResult BoundedMatchingSuite() {
  Tally t;
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = rng.Int(4, 50);
    int d = rng.Int(1, 8);
    Digraph g = RandomSparse(rng, n, d);
    Rational theta(rng.Int(1, 9), 10);
    std::string tag = "trial " + std::to_string(trial);
    try {
      BoundedMatchingResult r = BoundedMatching(g, Rational(d), theta);
      Check c = CheckBoundedMatching(g, Rational(d), theta, r);
      t.Require(static_cast<bool>(c), tag + ": " + c.reason);
      t.Require(IsMatching(r.matching), tag + ": not a matching");
      ++checked;
    } catch (const HypothesisViolation&) {
      // Declared only for 0 < e(G) < theta*d.
      t.Require(g.EdgeCount() > 0 && theta.TimesLess(d, g.EdgeCount()) == false,
                tag + ": undeclared violation");
    }
  }
  return {t.ok(), t.ok() ? std::to_string(checked) + "/500 triples checked exactly"
                         : t.Summary()};
}

// 6. Joint matching with quotas.
CriterionResult JointMatchingSuite() {
  Tally t;
  Rng rng(6);
  int max_attempts = 0, instances = 0;
  for (int trial = 0; instances < 100; ++trial) {
    int r = rng.Int(1, 3);
    int n = rng.Int(60, 200);
    std::vector<std::vector<Edge>> ms(r);
    for (auto& m : ms) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[v] = v;
      rng.Shuffle(order);
      int size = rng.Int(r * r + 1, n / 2);
      for (int i = 0; i < size; ++i) m.push_back({order[2 * i], order[2 * i + 1]});
    }
    // Feasibility check: every quota is positive and the union has maximum
    // degree at most r, which holds by construction for r matchings.
    ++instances;
    std::string tag = "instance " + std::to_string(trial);
    try {
      JointMatchingResult res = JointMatching(ms, r, trial);
      max_attempts = std::max(max_attempts, res.attempts);
      t.Require(res.attempts <= 64, tag + ": too many rounds");
      t.Require(!res.exact_fallback, tag + ": needed the exact search");
      t.Require(IsMatching(res.matching), tag + ": not a matching");
      for (const auto& m : ms) {
        int64_t common = 0;
        for (const Edge& e : m) {
          common += std::count(res.matching.begin(), res.matching.end(), e);
        }
        t.Require(common * (r * r + 1) >= static_cast<int64_t>(m.size()),
                  tag + ": quota missed");
      }
    } catch (const HypothesisViolation& e) {
      t.Require(false, tag + ": " + e.what());
    }
  }
  return {t.ok(), t.ok() ? "100 instances, max rounds " + std::to_string(max_attempts)
                         : t.Summary()};
}

// 7. Cycle-free path systems.
CriterionResult CycleFreeSuite() {
  Tally t;
  Rng rng(7);
  int by_matchings = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.Int(10, 60);
    int k = rng.Int(1, 3);
    Digraph g = RandomRegular(n, rng.Int(2, 6), false, trial);
    std::vector<std::vector<Edge>> subgraphs(k);
    for (const Edge& e : g.Edges()) {
      int which = rng.Int(0, k);
      if (which < k) subgraphs[which].push_back(e);
    }
    Rational alpha(6, n);
    std::string tag = "trial " + std::to_string(trial);
    try {
      CycleFreeResult r = CycleFreePathSystems(g, subgraphs, alpha, trial);
      by_matchings += r.method == "matchings";
      std::vector<Edge> all;
      for (int i = 0; i < k; ++i) {
        t.Require(static_cast<bool>(IsPathSystem(g, r.systems[i])), tag + ": not a path system");
        t.Require(static_cast<int64_t>(r.systems[i].size()) >=
                      static_cast<int64_t>(subgraphs[i].size()) / 6,
                  tag + ": quota missed");
        for (const Edge& e : r.systems[i]) {
          t.Require(std::find(subgraphs[i].begin(), subgraphs[i].end(), e) !=
                        subgraphs[i].end(),
                    tag + ": edge outside its subgraph");
        }
        all.insert(all.end(), r.systems[i].begin(), r.systems[i].end());
      }
      t.Require(!HasDirectedCycle(n, all), tag + ": union has a cycle");
    } catch (const HypothesisViolation& e) {
      t.Require(false, tag + ": " + e.what());
    }
  }
  return {t.ok(), t.ok() ? "200 families, " + std::to_string(by_matchings) +
                               " via matchings, rest via greedy selection"
                         : t.Summary()};
}

// 8. Sign selection, exhaustive.
CriterionResult SignSuite() {
  auto start = Clock::now();
  Tally t;
  int admissible = 0;
  for (int tb = 0; tb <= 1; ++tb) {
    for (int mask = 0; mask < 32; ++mask) {
      std::array<int, 5> x;
      for (int i = 0; i < 5; ++i) x[i] = (mask >> (4 - i)) & 1;
      bool congruent = (x[0] + x[1] + x[2]) % 2 == tb && (x[0] + x[3] + x[4]) % 2 == tb;
      if (!congruent) continue;
      ++admissible;
      std::array<int, 5> m = ChooseSigns(tb, x);
      t.Require(m[0] * x[0] + m[1] * x[1] + m[2] * x[2] == tb &&
                    m[0] * x[0] + m[3] * x[3] + m[4] * x[4] == tb,
                "mask " + std::to_string(mask));
    }
  }
  double ms = Seconds(start) * 1000;
  t.Require(ms < 1.0, "runtime");
  return {t.ok(), t.ok() ? std::to_string(admissible) + " congruent inputs signed, " +
                               std::to_string(ms) + " ms"
                         : t.Summary()};
}

// 9. Anti-directed decompositions and nine-partition balancing.
CriterionResult NineBalanceSuite() {
  Tally t;
  Rng rng(9);
  int balanced = 0, declared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 15 + trial % 16;
    int d = 2 + trial % 3;
    Digraph g = RandomRegular(n, d, true, trial);
    Partition p = Extremalize(g, RandomPartition(rng, n, 3), Rational(0)).partition;
    std::string tag = "instance " + std::to_string(trial);

    std::array<std::pair<int, int>, 3> types{{{1, 2}, {0, 2}, {0, 1}}};
    std::array<TypedPathSystem, 3> systems;
    for (int s = 0; s < 3; ++s) {
      systems[s].row = types[s].first;
      systems[s].col = types[s].second;
      for (const Edge& e : g.Edges()) {
        if (p.Row(e.from) != systems[s].row || p.Col(e.to) != systems[s].col) continue;
        std::vector<Edge> next = systems[s].edges;
        next.push_back(e);
        if (IsPathSystem(g, next)) systems[s].edges = std::move(next);
      }
    }
    AntiDirectedDecomposition dec = DecomposeAntiDirected(systems, p);
    Check dc = CheckDecomposition(dec, systems);
    t.Require(static_cast<bool>(dc), tag + ": decomposition " + dc.reason);

    try {
      BalanceResult r = BalanceNine(g, p, trial);
      ++balanced;
      t.Require(static_cast<bool>(IsPathSystem(g, r.q)), tag + ": not a path system");
      for (const Edge& e : r.q) t.Require(!IsGoodEdge(p, e), tag + ": good edge used");
      std::vector<std::vector<int64_t>> a = TypeCounts(p, r.q);
      for (int i = 0; i < 3; ++i) {
        int64_t net = 0;
        for (int j = 0; j < 3; ++j) net += a[i][j] - a[j][i];
        t.Require(net == p.RowSize(i) - p.ColSize(i), tag + ": identity");
      }
    } catch (const HypothesisViolation&) {
      ++declared;
    }
  }
  t.Require(balanced > 0, "no instance balanced");
  return {t.ok(), t.ok() ? "100 decompositions valid; " + std::to_string(balanced) +
                               " balanced exactly, " + std::to_string(declared) +
                               " declared hypothesis violations"
                         : t.Summary()};
}

// 10. Contraction and expansion round trip.
CriterionResult ContractionSuite() {
  Tally t;
  Rng rng(10);
  int tuples = 0;
  for (int trial = 0; trial < 20000 && tuples < 200; ++trial) {
    int n = 10 + trial % 11;
    int d = 3 + trial % 4;
    Digraph g = RandomRegular(n, d, false, trial);
    std::optional<Partition> p0 = FlooredExtremal(g, rng, 2, Rational(1, 5));
    if (!p0) continue;
    BalanceResult b;
    try {
      b = BalanceFour(g, *p0, false, trial);
    } catch (const HypothesisViolation&) {
      continue;
    }
    const Partition& p = b.partition ? *b.partition : *p0;
    Contraction c = Contract(g, p, b.q);
    std::string tag = "trial " + std::to_string(trial);
    t.Require(BadEdgeCount(c.graph, c.partition) <=
                  BadEdgeCount(g, p) - static_cast<int64_t>(b.q.size()),
              tag + ": bad edges increased");
    t.Require(c.partition.CellSize(0, 1) == c.partition.CellSize(1, 0),
              tag + ": contracted partition unbalanced");
    OracleResult h = FindHamiltonExact(c.graph);
    if (h.outcome != Outcome::kFound) continue;
    std::vector<int> cycle = ExpandCycle(g, c.graph, c.record, h.cycle);
    t.Require(static_cast<bool>(VerifyHamiltonCycle(g, cycle)), tag + ": expansion");
    ++tuples;
  }
  t.Require(tuples == 200, "only " + std::to_string(tuples) + " tuples");
  return {t.ok(), t.ok() ? "200 tuples expanded and verified" : t.Summary()};
}

// 11. Identification and lifting.
CriterionResult IdentificationSuite() {
  Tally t;
  Digraph c8 = DirectedCycle(8);
  Partition p8 = Partition::FromCells(8, 2, {{1, 2, 3}, {0}, {4}, {5, 6, 7}});
  ProperPair pair1 = CanonicalPair(p8, 0);
  IdentificationGraph j1 = Identify(c8, p8, pair1);
  t.Require(j1.graph.Edges() == DirectedCycle(4).Edges(), "first graph is not the 4-cycle");
  OracleResult h1 = FindHamiltonExact(j1.graph);
  LiftResult lift = LiftHamilton(c8, p8, pair1, j1.graph, h1.cycle);
  IdentificationGraph j2 = Identify(c8, p8, lift.pair2);
  t.Require(j2.graph.n() == 4 && j2.graph.EdgeCount() == 4, "second graph size");
  bool cyclic = true;
  for (int v = 0; v < 4; ++v) {
    cyclic = cyclic && j2.graph.OutDegree(v) == 1 && j2.graph.InDegree(v) == 1;
  }
  OracleResult h2 = FindHamiltonExact(j2.graph);
  t.Require(cyclic && h2.outcome == Outcome::kFound, "second graph is not a 4-cycle");
  std::vector<int> cycle = Splice(c8, lift, h2.cycle);
  t.Require(cycle == std::vector<int>({0, 1, 2, 3, 4, 5, 6, 7}), "lifted cycle differs");

  Rng rng(11);
  int runs = 0;
  for (int trial = 0; trial < 5000 && runs < 100; ++trial) {
    int n = 10 + trial % 11;
    Digraph g = RandomRegular(n, 3 + trial % 5, false, 2000 + trial);
    std::optional<Partition> p = FlooredExtremal(g, rng, 2, Rational(1, 5));
    if (!p || p->CellSize(0, 1) != p->CellSize(1, 0) || p->CellSize(0, 1) == 0) continue;
    DriverResult r = HamiltonFromFourPartition(g, *p, DriverConfig{});
    if (r.outcome != Outcome::kFound) continue;
    ++runs;
    t.Require(static_cast<bool>(VerifyHamiltonCycle(g, r.cycle)),
              "trial " + std::to_string(trial));
  }
  t.Require(runs == 100, "only " + std::to_string(runs) + " successful runs");
  return {t.ok(), t.ok() ? "8-cycle example exact; 100/100 lifted cycles verified"
                         : t.Summary()};
}

// 12. Oracle cross-check.
CriterionResult OracleSuite() {
  Tally t;
  Rng rng(12);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int d = rng.Int(2, 3);
    bool oriented = rng.Coin();
    int n = rng.Int(oriented ? 2 * d + 1 : d + 1, 12);
    Digraph g = RandomRegular(n, d, oriented, trial);
    OracleResult hk = HeldKarp(g);
    OracleResult bb = BranchAndBound(g, 100'000'000);
    std::string tag = "trial " + std::to_string(trial);
    t.Require(hk.outcome == bb.outcome, tag + ": disagreement");
    t.Require(bb.outcome != Outcome::kUnknown, tag + ": undecided");
    if (hk.outcome == Outcome::kFound) {
      ++found;
      t.Require(static_cast<bool>(VerifyHamiltonCycle(g, hk.cycle)) &&
                    static_cast<bool>(VerifyHamiltonCycle(g, bb.cycle)),
                tag + ": bad cycle");
    }
  }
  return {t.ok(), t.ok() ? "300 instances agree (" + std::to_string(found) + " Hamiltonian)"
                         : t.Summary()};
}

// 13. Pipeline soundness.
CriterionResult PipelineSuite() {
  auto start = Clock::now();
  Tally t;
  Rng rng(13);
  int found = 0, refuted = 0, unknown = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = rng.Int(10, 24);
    bool oriented = rng.Coin();
    int max_d = oriented ? (n - 1) / 2 : n - 1;
    int d = rng.Int(2, std::min(max_d, 8));
    Digraph g = RandomRegular(n, d, oriented, 5000 + trial);
    HamiltonReport r = Analyze(g, PipelineConfig{});
    std::string tag = "trial " + std::to_string(trial);
    if (r.outcome == Outcome::kFound) {
      ++found;
      t.Require(static_cast<bool>(VerifyHamiltonCycle(g, r.cycle)), tag + ": false cycle");
    } else if (r.outcome == Outcome::kNotHamiltonian) {
      ++refuted;
      t.Require(HeldKarp(g).outcome == Outcome::kNotHamiltonian, tag + ": false refutation");
    } else {
      ++unknown;
    }
  }
  double s = Seconds(start);
  t.Require(s < 600.0, "runtime");
  return {t.ok(), t.ok() ? std::to_string(found) + " found, " + std::to_string(refuted) +
                               " refuted, " + std::to_string(unknown) +
                               " unknown, no false claims, " + std::to_string(s) + " s"
                         : t.Summary()};
}

}  // namespace
}  // namespace hamlab

int main() {
  using hamlab::CriterionResult;
  struct Criterion {
    const char* name;
    std::function<CriterionResult()> run;
  };
  const std::vector<Criterion> criteria = {
      {"bridged cliques: regular, 2-connected, not well-connected, not Hamiltonian",
       hamlab::BridgedCliqueSuite},
      {"hub tournaments: structure, sampled well-connectivity, hub cut", hamlab::HubSuite},
      {"bipartite core: structure, connectivity, core cut", hamlab::BipartiteCoreSuite},
      {"partition degree identity", hamlab::PartitionIdentity},
      {"bounded matching inequalities", hamlab::BoundedMatchingSuite},
      {"joint matching quotas", hamlab::JointMatchingSuite},
      {"cycle-free path systems", hamlab::CycleFreeSuite},
      {"sign selection", hamlab::SignSuite},
      {"anti-directed decomposition and nine-partition balancing",
       hamlab::NineBalanceSuite},
      {"contraction round trip", hamlab::ContractionSuite},
      {"identification and lifting", hamlab::IdentificationSuite},
      {"oracle cross-check", hamlab::OracleSuite},
      {"pipeline soundness", hamlab::PipelineSuite},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
