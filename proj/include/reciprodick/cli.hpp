/*
   Copyright 2026 The reciprodick Authors

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

#ifndef RECIPRODICK_CLI_HPP
#define RECIPRODICK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace reciprodick::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
/// A verification found predicate/oracle disagreements (records still emitted).
inline constexpr int kExitMismatch = 2;

/// Runs `reciprodick <command> ...` with args excluding the program name.
/// Records go to `out` (or to --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reciprodick::cli

#endif  // RECIPRODICK_CLI_HPP
