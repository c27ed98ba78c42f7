/*
   Copyright 2026 the brauercalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_SELFTEST_HPP
#define BRAUER_SELFTEST_HPP

#include <string>
#include <vector>

namespace brauer {

/**
 * Built-in verification suites. Each runs a family of exact identities at
 * desk scale and reports per-check counts and timing; they back the
 * `selftest` CLI subcommand and the acceptance runner.
 */
struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  long millis = 0;
  std::vector<std::string> notes;
  bool passed() const { return failures == 0; }
};

std::vector<std::string> selftest_suite_names();
SuiteResult run_selftest(const std::string& name);
std::vector<SuiteResult> run_all_selftests();

}  // namespace brauer

#endif  // BRAUER_SELFTEST_HPP
