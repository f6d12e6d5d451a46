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

#include "hamlab/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamlab/balancer.hpp"
#include "hamlab/connectivity.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/expander.hpp"
#include "hamlab/partition.hpp"

namespace hamlab {
namespace {

bool InUnitInterval(const Rational& x) {
  return Rational(0) < x && x < Rational(1);
}

std::string Sizes(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.k(); ++i) {
    for (int j = 0; j < p.k(); ++j) {
      if (!out.empty()) out += " ";
      out += "V" + CellName(i, j) + "=" + std::to_string(p.CellSize(i, j));
    }
  }
  return out;
}

std::vector<int> Reversed(std::vector<int> cycle) {
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

// Shared state of one pipeline run.
class Run {
 public:
  Run(const Digraph& g, const PipelineConfig& config, std::string route)
      : g_(g), config_(config) {
    report_.profile = Profile(g);
    report_.route = std::move(route);
    driver_.oracle_budget = config.oracle_budget;
    driver_.seed = config.seed;
    driver_.tau = config.tau;
    driver_.expander_diagnostic_max_n = config.expander_diagnostic_max_n;
    driver_.expansion = {config.nu, config.tau};
  }

  const Digraph& g() const { return g_; }
  const PipelineConfig& config() const { return config_; }
  const DriverConfig& driver() const { return driver_; }
  HamiltonReport& report() { return report_; }

  void Stage(const std::string& stage, const Digraph& h,
             const std::string& outcome, const std::string& detail = "") {
    report_.trace.push_back({stage, h.n(), h.EdgeCount(), outcome, detail});
  }

  void Absorb(const Trace& trace, const std::string& prefix) {
    for (StageRecord rec : trace) {
      rec.stage = prefix + rec.stage;
      report_.trace.push_back(std::move(rec));
    }
  }

  HamiltonReport Oracle(const std::string& why) {
    if (!why.empty()) Stage("fallback", g_, "oracle", why);
    OracleResult o = FindHamiltonExact(g_, config_.oracle_budget);
    Stage("oracle", g_, OutcomeName(o.outcome),
          o.method + ", " + std::to_string(o.nodes) + " nodes");
    report_.outcome = o.outcome;
    report_.cycle = o.cycle;
    report_.exhaustive = o.outcome == Outcome::kNotHamiltonian;
    return Finish();
  }

  HamiltonReport Found(std::vector<int> cycle) {
    report_.outcome = Outcome::kFound;
    report_.cycle = std::move(cycle);
    Stage("result", g_, "found", "verified Hamilton cycle");
    return Finish();
  }

  HamiltonReport Finish() {
    AssertReportSound(g_, report_);
    return report_;
  }

  void RegimeNote(const Rational& alpha) {
    int d = report_.profile.regular_degree.value_or(0);
    bool in_regime = (alpha + config_.epsilon).TimesLeq(g_.n(), d);
    Stage("regime", g_, in_regime ? "inside" : "outside",
          "d = " + std::to_string(d) + ", needs d >= (" +
              (alpha + config_.epsilon).ToString() + ")n");
  }

  std::optional<ExpansionWitness> Witness(const Digraph& h,
                                          const ExpansionParams& params,
                                          const std::string& stage) {
    bool exact = h.n() <= std::min(config_.exact_expander_max_n, kExactExpanderMaxN);
    WitnessSearch search =
        FindWitness(h, params, exact ? WitnessMode::kExact : WitnessMode::kHeuristic,
                    config_.expander_budget, config_.seed,
                    std::max(config_.exact_expander_max_n, 1));
    std::string detail = exact ? "exact" : "heuristic";
    detail += ", " + std::to_string(search.evaluations) + " sets";
    if (search.witness) {
      detail += ", witness of size " + std::to_string(search.witness->set.Size()) +
                " with " + std::to_string(search.witness->rn_size) +
                " robust out-neighbours";
    }
    Stage(stage, h, search.witness ? "witness" : (exact ? "expander" : "no witness found"),
          detail);
    return search.witness;
  }

  // 4-partition from a witness, extremalized under the tau floor (or with
  // no floor when the partition already violates it).
  Partition ExtremalPartition(const Digraph& h, const ExpansionWitness& w) {
    ExpansionParams params{config_.nu, config_.tau};
    Partition p = PartitionFromWitness(h, w, params);
    ExtremalizeResult ex;
    try {
      ex = Extremalize(h, p, config_.tau);
    } catch (const InputError&) {
      ex = Extremalize(h, p, Rational(0));
      Stage("extremalize", h, "no floor", "witness partition violates the size floor");
    }
    PartitionReport rep = ValidatePartition(
        h, ex.partition, {config_.tau, config_.nu * Rational(4)});
    Stage("partition", h, rep.valid() ? "valid" : "outside regime",
          Sizes(ex.partition) + ", " + std::to_string(ex.moves) + " moves, " +
              std::to_string(rep.bad_edge_count) + " bad edges");
    return ex.partition;
  }

 private:
  const Digraph& g_;
  const PipelineConfig& config_;
  DriverConfig driver_;
  HamiltonReport report_;
};

// Contracts q, runs the four-partition driver and expands the cycle.
std::optional<std::vector<int>> ContractAndSolve(Run& run, const Digraph& h,
                                                 const Partition& p,
                                                 const std::vector<Edge>& q) {
  Contraction con = Contract(h, p, q);
  const Partition& pc = con.partition;
  run.Stage("contract", con.graph, "ok",
            std::to_string(con.record.paths.size()) + " paths, " + Sizes(pc));
  if (pc.CellSize(0, 1) != pc.CellSize(1, 0) || pc.CellSize(0, 1) == 0) {
    run.Stage("contract", con.graph, "unbalanced",
              "contracted partition needs |V12| = |V21| > 0");
    return std::nullopt;
  }
  DriverResult res = HamiltonFromFourPartition(con.graph, pc, run.driver());
  run.Absorb(res.trace, "four/");
  if (res.outcome != Outcome::kFound) return std::nullopt;
  return ExpandCycle(h, con.graph, con.record, res.cycle);
}

// Places each vertex of `pending` in the cell that creates the fewest bad
// edges with vertices already placed.
void PlaceGreedily(const Digraph& h, std::vector<int>& labels, int k,
                   const std::vector<int>& pending) {
  for (int v : pending) {
    int best_cell = 0, best_bad = -1;
    for (int cell = 0; cell < k * k; ++cell) {
      int row = cell / k, col = cell % k;
      int bad = 0;
      for (int u : h.Out(v)) {
        if (labels[u] >= 0 && row != labels[u] % k) ++bad;
      }
      for (int u : h.In(v)) {
        if (labels[u] >= 0 && labels[u] / k != col) ++bad;
      }
      if (best_bad < 0 || bad < best_bad) {
        best_bad = bad;
        best_cell = cell;
      }
    }
    labels[v] = best_cell;
  }
}

}  // namespace

void ValidateConfig(const PipelineConfig& c) {
  ValidateExpansionParams({c.nu, c.tau});
  if (!InUnitInterval(c.gamma) || !InUnitInterval(c.epsilon) ||
      !InUnitInterval(c.rho) || (c.alpha && !InUnitInterval(*c.alpha))) {
    throw InputError("gamma, epsilon, rho and alpha must lie in (0, 1)");
  }
  if (c.oracle_budget <= 0 || c.expander_budget < 0 ||
      c.well_connected_samples < 0 || c.max_certificate_cut < 0) {
    throw InputError("budgets and caps must be non-negative");
  }
}

int ExitCode(const HamiltonReport& report) {
  switch (report.outcome) {
    case Outcome::kFound:
      return 0;
    case Outcome::kNotHamiltonian:
      return 1;
    case Outcome::kUnknown:
      return 2;
  }
  return 2;
}

void AssertReportSound(const Digraph& g, const HamiltonReport& report) {
  if (report.outcome == Outcome::kFound) {
    Check c = VerifyHamiltonCycle(g, report.cycle);
    if (!c) throw std::logic_error("reported cycle fails verification: " + c.reason);
  } else if (report.outcome == Outcome::kNotHamiltonian) {
    bool certified = report.certificate && CertificateHolds(g, *report.certificate);
    if (!certified && !report.exhaustive) {
      throw std::logic_error("negative verdict without certificate or exhaustive search");
    }
  }
}

HamiltonReport RegularDigraphPipeline(const Digraph& g,
                                      const PipelineConfig& config) {
  ValidateConfig(config);
  Run run(g, config, "digraph-pipeline");
  const GraphProfile& profile = run.report().profile;
  if (!profile.regular_degree || g.HasLoops() || g.n() < 2) {
    run.Stage("profile", g, "rejected", "needs a loopless regular digraph");
    return run.Oracle("outside the route's hypotheses");
  }
  run.RegimeNote(config.alpha.value_or(Rational(1, 3)));
  std::optional<ExpansionWitness> w = run.Witness(g, {config.nu, config.tau}, "expander");
  if (!w) {
    run.report().route += "/expander";
    return run.Oracle("");
  }
  try {
    Partition p = run.ExtremalPartition(g, *w);
    int v12 = p.CellSize(0, 1), v21 = p.CellSize(1, 0);
    bool well_connected = true;
    if (std::min(v12, v21) == 0 && std::max(v12, v21) <= 1) {
      WellConnectedness wc =
          g.n() <= config.exact_well_connected_max_n
              ? StronglyWellConnectedExact(g)
              : StronglyWellConnectedSampled(g, config.well_connected_samples,
                                             config.seed);
      run.Stage("well-connected", g, VerdictName(wc.verdict),
                std::to_string(wc.bipartitions_checked) + " bipartitions");
      if (wc.verdict == Verdict::kNo) {
        return run.Oracle("not strongly well-connected");
      }
    }
    BalanceResult bal = BalanceFour(g, p, well_connected, config.seed);
    run.Stage("balance", g, "ok",
              bal.route + ", " + std::to_string(bal.q.size()) + " edges");
    Partition used = bal.partition.value_or(p);
    std::optional<std::vector<int>> cycle = ContractAndSolve(run, g, used, bal.q);
    if (cycle) return run.Found(*cycle);
    return run.Oracle("constructive route did not produce a cycle");
  } catch (const HypothesisViolation& e) {
    return run.Oracle(e.what());
  }
}

HamiltonReport RegularOrientedPipeline(const Digraph& g,
                                       const PipelineConfig& config) {
  ValidateConfig(config);
  Run run(g, config, "oriented-pipeline");
  const GraphProfile& profile = run.report().profile;
  if (!profile.regular_degree || !profile.oriented || g.HasLoops() || g.n() < 2) {
    run.Stage("profile", g, "rejected", "needs a loopless regular oriented graph");
    return run.Oracle("outside the route's hypotheses");
  }
  run.RegimeNote(config.alpha.value_or(Rational(1, 4)));
  std::optional<ExpansionWitness> w = run.Witness(g, {config.nu, config.tau}, "expander");
  if (!w) {
    run.report().route += "/expander";
    return run.Oracle("");
  }
  try {
    Partition p = run.ExtremalPartition(g, *w);
    if (p.CellSize(0, 0) > p.CellSize(1, 1)) p = p.Relabeled({1, 0});
    bool reversed = p.CellSize(0, 1) < p.CellSize(1, 0);
    Digraph h = reversed ? g.Transposed() : g;
    if (reversed) p = p.Transposed();
    run.Stage("normalize", h, "ok", std::string(reversed ? "edges reversed, " : "") + Sizes(p));
    auto undo = [&](std::vector<int> cycle) {
      return reversed ? Reversed(std::move(cycle)) : cycle;
    };

    int n = h.n();
    int r = p.CellSize(0, 1) - p.CellSize(1, 0);
    std::vector<int> v12 = p.CellMembers(0, 1);
    std::vector<char> in_r(n, 0);
    for (int i = 0; i < r; ++i) in_r[v12[i]] = 1;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
      if (!in_r[v]) keep.push_back(v);
    }
    Digraph hr = h.Induced(keep);
    std::vector<int> wl;
    for (int v : keep) wl.push_back(p.Cell(v));
    Partition wpart(2, wl);
    if (wpart.CellSize(0, 1) == 0) {
      return run.Oracle("V21 is empty, so no proper pair exists");
    }
    ProperPair pair = CanonicalPair(wpart, 1);
    IdentificationGraph j = Identify(hr, wpart, pair, true);
    Rational nu2 = SqrtFloor(config.nu, 1000);
    if (!(nu2 < config.tau)) nu2 = config.tau / Rational(2);
    ExpansionParams inner{nu2, config.tau};
    std::optional<ExpansionWitness> jw = run.Witness(j.graph, inner, "inner-expander");

    if (!jw) {
      run.report().route += "/quota";
      BalanceResult bal = BalanceFour(h, p, false, config.seed);
      run.Stage("balance", h, "ok",
                bal.route + ", " + std::to_string(bal.q.size()) + " edges");
      std::optional<std::vector<int>> cycle = ContractAndSolve(run, h, p, bal.q);
      if (cycle) return run.Found(undo(*cycle));
      return run.Oracle("constructive route did not produce a cycle");
    }

    run.report().route += "/nine";
    Partition u = PartitionFromWitness(j.graph, *jw, inner);
    std::vector<int> labels(n, -1);
    int t = pair.t;
    for (int x = 0; x < pair.size(); ++x) {
      if (x < t) {
        labels[keep[pair.out_map[x]]] = u.Row(x) * 3 + 2;
        labels[keep[pair.in_map[x]]] = 2 * 3 + u.Col(x);
      } else {
        labels[keep[pair.diag[x - t]]] = u.Row(x) * 3 + u.Col(x);
      }
    }
    for (int v : wpart.CellMembers(0, 0)) labels[keep[v]] = 2 * 3 + 2;
    std::vector<int> pending;
    for (int v = 0; v < n; ++v) {
      if (in_r[v]) pending.push_back(v);
    }
    PlaceGreedily(h, labels, 3, pending);
    Partition z(3, labels);
    ExtremalizeResult ex;
    try {
      ex = Extremalize(h, z, config.tau / Rational(6));
    } catch (const InputError&) {
      ex = Extremalize(h, z, Rational(0));
    }
    run.Stage("nine-partition", h, "ok",
              Sizes(ex.partition) + ", " + std::to_string(ex.moves) + " moves");
    DriverResult res = HamiltonFromNinePartition(h, ex.partition, run.driver());
    run.Absorb(res.trace, "nine/");
    if (res.outcome == Outcome::kFound) {
      if (res.fallback) run.report().route += "/fallback";
      return run.Found(undo(res.cycle));
    }
    run.report().route += "/fallback";
    run.report().outcome = res.outcome;
    run.report().exhaustive = res.outcome == Outcome::kNotHamiltonian;
    return run.Finish();
  } catch (const HypothesisViolation& e) {
    return run.Oracle(e.what());
  }
}

HamiltonReport Analyze(const Digraph& g, const PipelineConfig& config) {
  ValidateConfig(config);
  if (config.certificate_first && config.max_certificate_cut > 0) {
    std::optional<CutCertificate> cert =
        NonHamiltonicityCertificate(g, config.max_certificate_cut);
    if (cert) {
      HamiltonReport report;
      report.profile = Profile(g);
      report.route = "certificate";
      report.outcome = Outcome::kNotHamiltonian;
      report.certificate = cert;
      report.trace.push_back({"certificate", g.n(), g.EdgeCount(), "found",
                              std::to_string(cert->cut.size()) + "-cut leaves " +
                                  std::to_string(cert->components) + " components"});
      AssertReportSound(g, report);
      return report;
    }
  }
  GraphProfile profile = Profile(g);
  bool regular = profile.regular_degree && !g.HasLoops() && g.n() >= 2;
  if (regular && profile.oriented) return RegularOrientedPipeline(g, config);
  if (regular) return RegularDigraphPipeline(g, config);
  Run run(g, config, "oracle");
  return run.Oracle("");
}

}  // namespace hamlab
