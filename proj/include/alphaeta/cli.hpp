// Copyright 2026 The alphaeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALPHAETA_CLI_HPP
#define ALPHAETA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace alphaeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Text output
/// that has no --output file goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Reads a flat key=value config file into "--key value" tokens. Blank lines
/// and lines starting with '#' are skipped.
std::vector<std::string> config_tokens(const std::string &path);

}  // namespace alphaeta::cli

#endif
