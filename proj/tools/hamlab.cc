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

// Command-line front end: gen, analyze, solve, verify, certify, export.
// Exit codes: 0 cycle found (or check passed), 1 not Hamiltonian (or check
// failed), 2 unknown, 3 input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamlab/digraph.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/expander.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/io.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/partition.hpp"
#include "hamlab/pipeline.hpp"

namespace {

using hamlab::Json;

constexpr int kInputErrorExit = 3;

void Emit(const Json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    hamlab::WriteTextFile(out, text);
  }
}

std::string PropsPath(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() &&
      out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out.substr(0, out.size() - suffix.size()) + ".props.json";
  }
  return out + ".props.json";
}

std::vector<int> ParseIdList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw hamlab::InputError("bad vertex id \"" + item + "\"");
    }
  }
  return out;
}

struct Options {
  std::string in, out, config, dot, cycle, cut, partition;
  std::string family;
  int n = 0, d = 0;
  std::optional<uint64_t> seed;
  std::optional<int64_t> budget;
  bool expander = false, exact = false, heuristic = false;
  std::string nu, tau;
  int max_cut = 4;
};

hamlab::PipelineConfig LoadConfig(const Options& o) {
  hamlab::PipelineConfig c;
  if (!o.config.empty()) c = hamlab::ConfigFromJson(hamlab::ReadJsonFile(o.config));
  if (o.seed) c.seed = *o.seed;
  if (o.budget) c.oracle_budget = *o.budget;
  if (!o.nu.empty()) c.nu = hamlab::Rational::Parse(o.nu);
  if (!o.tau.empty()) c.tau = hamlab::Rational::Parse(o.tau);
  hamlab::ValidateConfig(c);
  return c;
}

void WriteDot(const Options& o, const hamlab::Digraph& g,
              const hamlab::Partition* p) {
  if (!o.dot.empty()) hamlab::WriteTextFile(o.dot, hamlab::ToDot(g, p));
}

int Gen(const Options& o) {
  if (o.out.empty()) throw hamlab::InputError("gen needs --out");
  hamlab::GeneratorSpec spec{o.family, o.n, o.d, o.seed.value_or(0)};
  hamlab::Construction c = hamlab::Generate(spec);
  Emit(hamlab::GraphToJson(c.graph), o.out);
  Emit(hamlab::PropertiesToJson(c.props), PropsPath(o.out));
  WriteDot(o, c.graph, nullptr);
  return 0;
}

int Analyze(const Options& o) {
  hamlab::Digraph g = hamlab::GraphFromJson(hamlab::ReadJsonFile(o.in));
  hamlab::PipelineConfig c = LoadConfig(o);
  if (o.expander) {
    if (o.exact && o.heuristic) {
      throw hamlab::InputError("--exact and --heuristic are exclusive");
    }
    hamlab::ExpansionParams params{c.nu, c.tau};
    bool exact = o.exact || (!o.heuristic && g.n() <= c.exact_expander_max_n);
    hamlab::WitnessSearch s = hamlab::FindWitness(
        g, params, exact ? hamlab::WitnessMode::kExact : hamlab::WitnessMode::kHeuristic,
        c.expander_budget, c.seed, std::max(c.exact_expander_max_n, 1));
    Json j;
    j["mode"] = exact ? "exact" : "heuristic";
    j["nu"] = c.nu.ToString();
    j["tau"] = c.tau.ToString();
    j["evaluations"] = s.evaluations;
    j["exhaustive"] = s.exhaustive;
    j["witness"] = s.witness ? hamlab::WitnessToJson(*s.witness) : Json(nullptr);
    if (s.witness) {
      hamlab::Partition p = hamlab::PartitionFromWitness(g, *s.witness, params);
      j["partition"] = hamlab::PartitionToJson(p);
      WriteDot(o, g, &p);
    } else {
      WriteDot(o, g, nullptr);
    }
    Emit(j, o.out);
    return 0;
  }
  if (!o.partition.empty()) {
    hamlab::Partition p =
        hamlab::PartitionFromJson(hamlab::ReadJsonFile(o.partition), g.n());
    hamlab::PartitionReport r =
        hamlab::ValidatePartition(g, p, {c.tau, c.gamma});
    Emit(hamlab::PartitionReportToJson(r), o.out);
    WriteDot(o, g, &p);
    return r.valid() ? 0 : 1;
  }
  hamlab::HamiltonReport r = hamlab::Analyze(g, c);
  Emit(hamlab::ReportToJson(r, c), o.out);
  WriteDot(o, g, nullptr);
  return hamlab::ExitCode(r);
}

int Solve(const Options& o) {
  hamlab::Digraph g = hamlab::GraphFromJson(hamlab::ReadJsonFile(o.in));
  hamlab::OracleResult r =
      hamlab::FindHamiltonExact(g, o.budget.value_or(hamlab::kDefaultOracleBudget));
  Json j;
  j["outcome"] = hamlab::OutcomeName(r.outcome);
  j["method"] = r.method;
  j["nodes"] = r.nodes;
  if (r.outcome == hamlab::Outcome::kFound) j["cycle"] = r.cycle;
  Emit(j, o.out);
  switch (r.outcome) {
    case hamlab::Outcome::kFound:
      return 0;
    case hamlab::Outcome::kNotHamiltonian:
      return 1;
    case hamlab::Outcome::kUnknown:
      return 2;
  }
  return 2;
}

int Verify(const Options& o) {
  hamlab::Digraph g = hamlab::GraphFromJson(hamlab::ReadJsonFile(o.in));
  std::vector<int> cycle = hamlab::CycleFromJson(hamlab::ReadJsonFile(o.cycle));
  hamlab::Check check = hamlab::VerifyHamiltonCycle(g, cycle);
  Json j;
  j["valid"] = static_cast<bool>(check);
  if (!check) j["reason"] = check.reason;
  Emit(j, o.out);
  return check ? 0 : 1;
}

int Certify(const Options& o) {
  hamlab::Digraph g = hamlab::GraphFromJson(hamlab::ReadJsonFile(o.in));
  std::vector<std::vector<int>> candidates;
  if (!o.cut.empty()) {
    std::vector<int> cut = ParseIdList(o.cut);
    for (int v : cut) {
      if (v < 0 || v >= g.n()) throw hamlab::InputError("cut vertex out of range");
    }
    candidates.push_back(cut);
  }
  std::optional<hamlab::CutCertificate> cert =
      hamlab::NonHamiltonicityCertificate(g, o.max_cut, candidates);
  Json j;
  j["certificate"] = cert ? hamlab::CertificateToJson(*cert) : Json(nullptr);
  Emit(j, o.out);
  return cert ? 1 : 2;
}

int Export(const Options& o) {
  hamlab::Digraph g = hamlab::GraphFromJson(hamlab::ReadJsonFile(o.in));
  std::optional<hamlab::Partition> p;
  if (!o.partition.empty()) {
    p = hamlab::PartitionFromJson(hamlab::ReadJsonFile(o.partition), g.n());
  }
  std::string dot = hamlab::ToDot(g, p ? &*p : nullptr);
  std::string target = o.dot.empty() ? o.out : o.dot;
  if (target.empty()) {
    std::cout << dot;
  } else {
    hamlab::WriteTextFile(target, dot);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles in regular digraphs and oriented graphs"};
  app.require_subcommand(1);
  Options o;

  std::string families;
  for (const std::string& f : hamlab::FamilyNames()) {
    families += (families.empty() ? "" : ", ") + f;
  }
  CLI::App* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--family", o.family, families)->required();
  gen->add_option("--n", o.n, "size parameter")->required();
  gen->add_option("--d", o.d, "degree for random families");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "graph JSON path")->required();
  gen->add_option("--dot", o.dot, "DOT output path");

  CLI::App* analyze = app.add_subcommand("analyze", "run the pipeline");
  analyze->add_option("--in", o.in, "graph JSON")->required()->check(CLI::ExistingFile);
  analyze->add_option("--out", o.out, "report JSON path (default stdout)");
  analyze->add_option("--config", o.config, "config JSON")->check(CLI::ExistingFile);
  analyze->add_option("--seed", o.seed, "random seed");
  analyze->add_option("--budget", o.budget, "oracle node budget");
  analyze->add_option("--dot", o.dot, "DOT output path");
  analyze->add_flag("--expander", o.expander, "only search for an expansion witness");
  analyze->add_option("--nu", o.nu, "nu as a fraction, e.g. 1/20");
  analyze->add_option("--tau", o.tau, "tau as a fraction, e.g. 1/5");
  analyze->add_flag("--exact", o.exact, "exhaustive witness search");
  analyze->add_flag("--heuristic", o.heuristic, "local-search witness search");
  analyze->add_option("--partition", o.partition, "validate a partition JSON")
      ->check(CLI::ExistingFile);

  CLI::App* solve = app.add_subcommand("solve", "run the exact oracle");
  solve->add_option("--in", o.in, "graph JSON")->required()->check(CLI::ExistingFile);
  solve->add_option("--out", o.out, "result JSON path");
  solve->add_option("--budget", o.budget, "search node budget");

  CLI::App* verify = app.add_subcommand("verify", "check a Hamilton cycle");
  verify->add_option("--in", o.in, "graph JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--cycle", o.cycle, "cycle JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--out", o.out, "result JSON path");

  CLI::App* certify = app.add_subcommand("certify", "search for a cut certificate");
  certify->add_option("--in", o.in, "graph JSON")->required()->check(CLI::ExistingFile);
  certify->add_option("--cut", o.cut, "candidate cut, e.g. \"21,22\"");
  certify->add_option("--max-cut", o.max_cut, "largest cut to enumerate");
  certify->add_option("--out", o.out, "result JSON path");

  CLI::App* exp = app.add_subcommand("export", "write a DOT file");
  exp->add_option("--in", o.in, "graph JSON")->required()->check(CLI::ExistingFile);
  exp->add_option("--partition", o.partition, "partition JSON")->check(CLI::ExistingFile);
  exp->add_option("--dot", o.dot, "DOT output path");
  exp->add_option("--out", o.out, "DOT output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputErrorExit;
  }

  try {
    if (*gen) return Gen(o);
    if (*analyze) return Analyze(o);
    if (*solve) return Solve(o);
    if (*verify) return Verify(o);
    if (*certify) return Certify(o);
    if (*exp) return Export(o);
  } catch (const hamlab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputErrorExit;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputErrorExit;
  }
  return kInputErrorExit;
}
