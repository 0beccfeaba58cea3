// Copyright 2026 The quadricode developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUADRICODE_SUITES_HPP
#define QUADRICODE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace quadricode {

// Knobs shared by every verification suite. The modulus and primitive
// choices select alternate extension-field presentations (0 means the
// canonical least choice); the verified statements must not depend on them.
// Nonnegative q/s overrides restrict a suite to its matching instances.
struct SuiteConfig {
  uint64_t seed = 0xC0DE5EEDull;
  uint32_t threads = 1;
  uint64_t budget = 1ull << 31;
  bool timing = false;
  uint32_t modulus_choice = 0;
  uint32_t primitive_choice = 0;
  int32_t q_override = -1;
  int32_t s_override = -1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<CheckResult> checks;
  uint64_t elapsed_ms = 0;
};

// Named suites runnable from the command line: hyperbolic, elliptic, segre,
// twisted, equivalence, cyclic, psl2, lemma-uv, corollaries, example-q5.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

// The numbered acceptance gates, 1 through 12.
SuiteResult run_criterion(uint32_t index, const SuiteConfig& cfg);
constexpr uint32_t kCriterionCount = 12;

}  // namespace quadricode

#endif  // QUADRICODE_SUITES_HPP
