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

#include "hamlab/io.hpp"

#include <fstream>
#include <sstream>

#include "hamlab/errors.hpp"

namespace hamlab {
namespace {

int AsInt(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<int>();
}

std::vector<int> IntList(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(AsInt(x, what + " entry"));
  return out;
}

Json EdgeList(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.from, e.to});
  return out;
}

Rational ParseRational(const Json& j, const std::string& key) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  throw InputError(key + " must be a rational string such as \"1/20\"");
}

}  // namespace

Json GraphToJson(const Digraph& g) {
  Json j;
  j["n"] = g.n();
  j["edges"] = EdgeList(g.Edges());
  j["loops_allowed"] = g.loops_allowed();
  return j;
}

Digraph GraphFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("graph JSON needs \"n\" and \"edges\"");
  }
  int n = AsInt(j["n"], "n");
  if (n < 0) throw InputError("n must be non-negative");
  bool loops = false;
  if (j.contains("loops_allowed")) {
    if (!j["loops_allowed"].is_boolean()) {
      throw InputError("loops_allowed must be a boolean");
    }
    loops = j["loops_allowed"].get<bool>();
  }
  std::vector<Edge> edges;
  if (!j["edges"].is_array()) throw InputError("edges must be an array");
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw InputError("each edge must be a pair [u, v]");
    }
    edges.push_back({AsInt(e[0], "edge endpoint"), AsInt(e[1], "edge endpoint")});
  }
  return Digraph(n, edges, loops);
}

Json PartitionToJson(const Partition& p) {
  Json cells = Json::object();
  for (int i = 0; i < p.k(); ++i) {
    for (int j = 0; j < p.k(); ++j) cells[CellName(i, j)] = p.CellMembers(i, j);
  }
  Json j;
  j["k"] = p.k();
  j["cells"] = cells;
  return j;
}

Partition PartitionFromJson(const Json& j, int n) {
  if (!j.is_object() || !j.contains("k") || !j.contains("cells") ||
      !j["cells"].is_object()) {
    throw InputError("partition JSON needs \"k\" and a \"cells\" object");
  }
  int k = AsInt(j["k"], "k");
  if (k < 1 || k > 9) throw InputError("k must lie in [1, 9]");
  std::vector<std::vector<int>> cells(k * k);
  for (const auto& [name, members] : j["cells"].items()) {
    if (name.size() != 2 || name[0] < '1' || name[0] > '0' + k ||
        name[1] < '1' || name[1] > '0' + k) {
      throw InputError("bad cell name \"" + name + "\"");
    }
    cells[(name[0] - '1') * k + (name[1] - '1')] = IntList(members, "cell");
  }
  return Partition::FromCells(n, k, cells);
}

Json WitnessToJson(const ExpansionWitness& w) {
  Json j;
  j["S"] = w.set.Members();
  j["rn_size"] = w.rn_size;
  return j;
}

ExpansionWitness WitnessFromJson(const Json& j, int n) {
  if (!j.is_object() || !j.contains("S") || !j.contains("rn_size")) {
    throw InputError("witness JSON needs \"S\" and \"rn_size\"");
  }
  std::vector<int> members = IntList(j["S"], "S");
  for (int v : members) {
    if (v < 0 || v >= n) throw InputError("witness member out of range");
  }
  return {VertexSet::Of(n, members), AsInt(j["rn_size"], "rn_size")};
}

std::vector<int> CycleFromJson(const Json& j) {
  if (j.is_object() && j.contains("cycle")) return IntList(j["cycle"], "cycle");
  return IntList(j, "cycle");
}

Json CertificateToJson(const CutCertificate& c) {
  Json j;
  j["cut"] = c.cut;
  j["components"] = c.components;
  return j;
}

Json ProfileToJson(const GraphProfile& p) {
  Json j;
  j["n"] = p.n;
  j["edges"] = p.edge_count;
  j["regular_degree"] = p.regular_degree ? Json(*p.regular_degree) : Json(nullptr);
  j["oriented"] = p.oriented;
  j["min_semidegree"] = p.min_semidegree;
  j["max_semidegree"] = p.max_semidegree;
  return j;
}

Json PropertiesToJson(const ExpectedProperties& p) {
  Json j;
  j["family"] = p.family;
  j["vertices"] = p.vertices;
  j["regular_degree"] = p.regular_degree;
  j["oriented"] = p.oriented;
  if (p.hamiltonian) j["hamiltonian"] = *p.hamiltonian;
  if (p.strong_connectivity) j["strong_connectivity"] = *p.strong_connectivity;
  if (p.well_connected) j["well_connected"] = *p.well_connected;
  if (!p.cut.empty()) {
    j["cut"] = p.cut;
    j["cut_components"] = p.cut_components;
  }
  return j;
}

Json PartitionReportToJson(const PartitionReport& r) {
  Json j;
  j["bad_edge_count"] = r.bad_edge_count;
  j["row_sizes"] = r.row_sizes;
  j["col_sizes"] = r.col_sizes;
  j["imbalance"] = r.imbalance;
  j["bad_edges_ok"] = r.bad_edges_ok;
  j["sizes_ok"] = r.sizes_ok;
  j["identity_holds"] = r.identity_holds ? Json(*r.identity_holds) : Json(nullptr);
  j["valid"] = r.valid();
  return j;
}

Json TraceToJson(const Trace& t) {
  Json out = Json::array();
  for (const StageRecord& s : t) {
    Json j;
    j["stage"] = s.stage;
    j["n"] = s.n;
    j["edges"] = s.edges;
    j["outcome"] = s.outcome;
    j["detail"] = s.detail;
    out.push_back(j);
  }
  return out;
}

Json BalanceResultToJson(const BalanceResult& b) {
  Json j;
  j["route"] = b.route;
  j["edges"] = EdgeList(b.q);
  j["a"] = b.a;
  j["targets"] = b.targets;
  j["reversed"] = b.reversed;
  j["index_map"] = b.index_map;
  j["edge_bound"] = b.edge_bound;
  if (b.partition) j["partition"] = PartitionToJson(*b.partition);
  j["notes"] = b.notes;
  return j;
}

Json ContractionRecordToJson(const ContractionRecord& r) {
  Json paths = Json::array();
  for (const ContractedPath& p : r.paths) {
    Json x;
    x["vertex"] = p.vertex;
    x["path"] = p.path;
    x["from_cell"] = p.from_cell;
    x["to_cell"] = p.to_cell;
    paths.push_back(x);
  }
  Json j;
  j["original_n"] = r.original_n;
  j["origin"] = r.origin;
  j["paths"] = paths;
  j["dropped_loops"] = r.dropped_loops;
  return j;
}

Json ConfigToJson(const PipelineConfig& c) {
  Json j;
  j["nu"] = c.nu.ToString();
  j["tau"] = c.tau.ToString();
  j["gamma"] = c.gamma.ToString();
  j["epsilon"] = c.epsilon.ToString();
  j["rho"] = c.rho.ToString();
  j["alpha"] = c.alpha ? Json(c.alpha->ToString()) : Json(nullptr);
  j["exact_expander_max_n"] = c.exact_expander_max_n;
  j["expander_budget"] = c.expander_budget;
  j["exact_well_connected_max_n"] = c.exact_well_connected_max_n;
  j["well_connected_samples"] = c.well_connected_samples;
  j["max_certificate_cut"] = c.max_certificate_cut;
  j["oracle_budget"] = c.oracle_budget;
  j["expander_diagnostic_max_n"] = c.expander_diagnostic_max_n;
  j["seed"] = c.seed;
  j["certificate_first"] = c.certificate_first;
  return j;
}

PipelineConfig ConfigFromJson(const Json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  PipelineConfig c;
  for (const auto& [key, v] : j.items()) {
    auto integer = [&]() -> int64_t {
      if (!v.is_number_integer()) throw InputError(key + " must be an integer");
      return v.get<int64_t>();
    };
    if (key == "nu") c.nu = ParseRational(v, key);
    else if (key == "tau") c.tau = ParseRational(v, key);
    else if (key == "gamma") c.gamma = ParseRational(v, key);
    else if (key == "epsilon") c.epsilon = ParseRational(v, key);
    else if (key == "rho") c.rho = ParseRational(v, key);
    else if (key == "alpha") {
      if (v.is_null()) c.alpha.reset();
      else c.alpha = ParseRational(v, key);
    }
    else if (key == "exact_expander_max_n") c.exact_expander_max_n = static_cast<int>(integer());
    else if (key == "expander_budget") c.expander_budget = integer();
    else if (key == "exact_well_connected_max_n") c.exact_well_connected_max_n = static_cast<int>(integer());
    else if (key == "well_connected_samples") c.well_connected_samples = static_cast<int>(integer());
    else if (key == "max_certificate_cut") c.max_certificate_cut = static_cast<int>(integer());
    else if (key == "oracle_budget") c.oracle_budget = integer();
    else if (key == "expander_diagnostic_max_n") c.expander_diagnostic_max_n = static_cast<int>(integer());
    else if (key == "seed") c.seed = static_cast<uint64_t>(integer());
    else if (key == "certificate_first") {
      if (!v.is_boolean()) throw InputError(key + " must be a boolean");
      c.certificate_first = v.get<bool>();
    } else {
      throw InputError("unknown config key \"" + key + "\"");
    }
  }
  ValidateConfig(c);
  return c;
}

Json ReportToJson(const HamiltonReport& r, const PipelineConfig& c) {
  Json j;
  Json constants = ConfigToJson(c);
  constants["note"] = "desk-scale surrogate constants";
  j["constants"] = constants;
  j["profile"] = ProfileToJson(r.profile);
  j["route"] = r.route;
  j["outcome"] = OutcomeName(r.outcome);
  if (r.outcome == Outcome::kFound) j["cycle"] = r.cycle;
  if (r.certificate) j["certificate"] = CertificateToJson(*r.certificate);
  j["exhaustive"] = r.exhaustive;
  j["trace"] = TraceToJson(r.trace);
  return j;
}

std::string ToDot(const Digraph& g, const Partition* p) {
  if (p && p->n() != g.n()) throw InputError("partition size does not match graph");
  std::ostringstream out;
  out << "digraph G {\n";
  if (p) {
    for (int i = 0; i < p->k(); ++i) {
      for (int j = 0; j < p->k(); ++j) {
        std::vector<int> members = p->CellMembers(i, j);
        if (members.empty()) continue;
        out << "  subgraph cluster_" << CellName(i, j) << " {\n    label=\"V"
            << CellName(i, j) << "\";\n";
        for (int v : members) out << "    " << v << ";\n";
        out << "  }\n";
      }
    }
  } else {
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.Edges()) {
    out << "  " << e.from << " -> " << e.to;
    if (p && !IsGoodEdge(*p, e)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace hamlab
