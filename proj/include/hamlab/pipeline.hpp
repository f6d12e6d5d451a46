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

#ifndef HAMLAB_PIPELINE_HPP_
#define HAMLAB_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/identification.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/rational.hpp"
#include "hamlab/trace.hpp"

namespace hamlab {

// Constants are desk-scale stand-ins for an asymptotic hierarchy; every
// stage re-checks what it needs and falls back to the oracle otherwise.
struct PipelineConfig {
  Rational nu = Rational(1, 20);
  Rational tau = Rational(1, 5);
  Rational gamma = Rational(1, 25);
  Rational epsilon = Rational(1, 10);
  Rational rho = Rational(1, 20);
  // Minimum degree ratio of the route; 1/3 for digraphs and 1/4 for
  // oriented graphs when unset.
  std::optional<Rational> alpha;
  int exact_expander_max_n = 20;
  int64_t expander_budget = 200'000;
  int exact_well_connected_max_n = 20;
  int well_connected_samples = 2000;
  int max_certificate_cut = 4;
  int64_t oracle_budget = kDefaultOracleBudget;
  int expander_diagnostic_max_n = 14;
  uint64_t seed = 1;
  bool certificate_first = true;
};

// Throws InputError unless 0 < nu < tau < 1 and gamma, epsilon, rho and
// alpha (if set) lie in (0, 1).
void ValidateConfig(const PipelineConfig& config);

struct HamiltonReport {
  GraphProfile profile;
  std::string route;
  Trace trace;
  Outcome outcome = Outcome::kUnknown;
  std::vector<int> cycle;
  std::optional<CutCertificate> certificate;
  // The verdict kNotHamiltonian came from a complete oracle search.
  bool exhaustive = false;
};

// 0 cycle found, 1 not Hamiltonian, 2 unknown.
int ExitCode(const HamiltonReport& report);

// Regular digraph route: expansion check (oracle on the fast path), else
// the 4-partition from the witness, extremalization, four-partition
// balancing, contraction and the four-partition driver. Every failure is
// recorded and answered by the oracle on g.
HamiltonReport RegularDigraphPipeline(const Digraph& g,
                                      const PipelineConfig& config);

// Regular oriented route: expansion check, 4-partition, normalization
// (|V11| <= |V22| by index swap, |V12| >= |V21| by reversing edges), then
// either the quota route on G12 or, when the index-1 identification graph
// of G - R has an expansion witness, the nine-partition driver on the
// partition built from that witness.
HamiltonReport RegularOrientedPipeline(const Digraph& g,
                                       const PipelineConfig& config);

// Certificate search (if enabled), then the oriented route for regular
// oriented graphs, the digraph route for other regular graphs and the
// oracle for everything else.
HamiltonReport Analyze(const Digraph& g, const PipelineConfig& config);

// Checks the report against g: a found cycle must verify, and a negative
// verdict needs a valid certificate or an exhaustive search. Throws
// std::logic_error otherwise.
void AssertReportSound(const Digraph& g, const HamiltonReport& report);

}  // namespace hamlab

#endif  // HAMLAB_PIPELINE_HPP_
