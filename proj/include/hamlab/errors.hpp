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

#ifndef HAMLAB_ERRORS_HPP_
#define HAMLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hamlab {

// Malformed input: bad vertex ids, duplicate edges, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A construction step cannot meet its quantitative guarantee on this
// instance, typically because the instance is outside the parameter regime
// the step was designed for. Callers fall back to exact search.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hamlab

#endif  // HAMLAB_ERRORS_HPP_
