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

#ifndef BRAUER_CLI_HPP
#define BRAUER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer {

/**
 * The command-line front end. Output is deterministic: byte-identical across
 * runs for identical inputs. Exit codes: 0 success, 1 input or validation
 * error, 2 at least one Unknown verdict (so scripts can tell "not decided up
 * to the bound" from "proved").
 */
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer

#endif  // BRAUER_CLI_HPP
