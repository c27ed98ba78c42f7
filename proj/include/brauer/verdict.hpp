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

#ifndef BRAUER_VERDICT_HPP
#define BRAUER_VERDICT_HPP

#include <string>

namespace brauer {

// Three-valued result of a bounded decision procedure. Proved and Refuted
// always come with an independently checkable witness or certificate in the
// operation-specific result struct; Unknown records the search bound used.
enum class Outcome { Proved, Refuted, Unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Proved:
      return "proved";
    case Outcome::Refuted:
      return "refuted";
    default:
      return "unknown";
  }
}

}  // namespace brauer

#endif  // BRAUER_VERDICT_HPP
