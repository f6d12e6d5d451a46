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

#ifndef HAMLAB_TRACE_HPP_
#define HAMLAB_TRACE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace hamlab {

// One step of a pipeline or driver, in execution order.
struct StageRecord {
  std::string stage;
  int n = 0;               // vertices of the graph the stage worked on
  int64_t edges = 0;
  std::string outcome;     // "ok", "found", "not_hamiltonian", "unknown", ...
  std::string detail;
};

using Trace = std::vector<StageRecord>;

}  // namespace hamlab

#endif  // HAMLAB_TRACE_HPP_
