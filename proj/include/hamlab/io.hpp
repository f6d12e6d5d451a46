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

#ifndef HAMLAB_IO_HPP_
#define HAMLAB_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "hamlab/balancer.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/digraph.hpp"
#include "hamlab/expander.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/oracle.hpp"
#include "hamlab/partition.hpp"
#include "hamlab/pipeline.hpp"

namespace hamlab {

using Json = nlohmann::ordered_json;

// All readers throw InputError on malformed documents.

// {"n": int, "edges": [[u, v], ...], "loops_allowed": bool}
Json GraphToJson(const Digraph& g);
Digraph GraphFromJson(const Json& j);

// {"k": k, "cells": {"11": [...], "12": [...], ...}} with 1-based names.
Json PartitionToJson(const Partition& p);
Partition PartitionFromJson(const Json& j, int n);

// {"S": [...], "rn_size": k}
Json WitnessToJson(const ExpansionWitness& w);
ExpansionWitness WitnessFromJson(const Json& j, int n);

// Accepts a bare array or {"cycle": [...]}.
std::vector<int> CycleFromJson(const Json& j);

Json CertificateToJson(const CutCertificate& c);
Json ProfileToJson(const GraphProfile& p);
Json PropertiesToJson(const ExpectedProperties& p);
Json PartitionReportToJson(const PartitionReport& r);
Json TraceToJson(const Trace& t);
Json BalanceResultToJson(const BalanceResult& b);
Json ContractionRecordToJson(const ContractionRecord& r);

// Rationals are written as "a/b" strings. Missing keys keep their
// defaults; unknown keys are rejected.
Json ConfigToJson(const PipelineConfig& c);
PipelineConfig ConfigFromJson(const Json& j);

// The report includes the constants it ran with.
Json ReportToJson(const HamiltonReport& r, const PipelineConfig& c);

// Graphviz digraph; vertices are grouped by cell when p is given.
std::string ToDot(const Digraph& g, const Partition* p = nullptr);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace hamlab

#endif  // HAMLAB_IO_HPP_
