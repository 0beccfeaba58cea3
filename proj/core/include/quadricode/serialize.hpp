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

#ifndef QUADRICODE_SERIALIZE_HPP
#define QUADRICODE_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quadricode/analysis.hpp"
#include "quadricode/codes.hpp"
#include "quadricode/suites.hpp"

namespace quadricode {

// Deterministic renderings: fixed key order, stable integer formatting, and
// a trailing newline. Elapsed times are zeroed unless keep_timing is set, so
// identical inputs yield byte-identical output. The text form mirrors the
// JSON content line for line; absent optional values print as "-".

std::string report_json(const ParamReport& rep, bool keep_timing = false);
std::string report_text(const ParamReport& rep, bool keep_timing = false);

// Code summary: family, parameters, field; include_matrix adds the labels
// and the full generator.
std::string code_json(const LinearCode& c, bool include_matrix = false);
std::string code_text(const LinearCode& c, bool include_matrix = false);

std::string suite_json(const SuiteResult& r, bool keep_timing = false);
std::string suite_text(const SuiteResult& r, bool keep_timing = false);

// Output of a section-maximum search.
struct SearchOutcome {
  std::string variety;
  uint32_t q = 0;
  uint32_t s = 0;
  uint32_t max_zeros = 0;
  uint32_t bound = 0;
  uint64_t maximizer_count = 0;
  std::vector<std::string> sample_forms;
};
std::string search_json(const SearchOutcome& o);
std::string search_text(const SearchOutcome& o);

// Output of a point count.
struct CountOutcome {
  std::string variety;
  uint32_t q = 0;
  uint32_t d = 0;
  uint64_t points = 0;
};
std::string count_json(const CountOutcome& o);
std::string count_text(const CountOutcome& o);

}  // namespace quadricode

#endif  // QUADRICODE_SERIALIZE_HPP
