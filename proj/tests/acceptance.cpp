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
//
// Runs the full check battery and prints one verdict line per criterion.
// Exits nonzero when any line reads FAIL. Pass -v to also list the
// individual checks of each criterion.

#include <cstdio>
#include <cstring>
#include <exception>

#include "quadricode/suites.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  quadricode::SuiteConfig cfg;
  cfg.timing = true;
  bool all_pass = true;
  for (uint32_t i = 1; i <= quadricode::kCriterionCount; ++i) {
    bool pass = false;
    try {
      const quadricode::SuiteResult r = quadricode::run_criterion(i, cfg);
      pass = r.pass;
      std::printf("criterion %u %s (%zu checks, %llu ms)\n", i,
                  pass ? "PASS" : "FAIL", r.checks.size(),
                  static_cast<unsigned long long>(r.elapsed_ms));
      for (const auto& c : r.checks) {
        if (!c.pass || verbose)
          std::printf("  %-4s %s%s%s\n", c.pass ? "ok" : "FAIL",
                      c.name.c_str(), c.details.empty() ? "" : ": ",
                      c.details.c_str());
      }
    } catch (const std::exception& e) {
      std::printf("criterion %u FAIL (uncaught: %s)\n", i, e.what());
    }
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
