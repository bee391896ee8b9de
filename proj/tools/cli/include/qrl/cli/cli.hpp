// Copyright 2026 The qrl-thermal Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrl::cli {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `argv` (argv[0] is the program name). CSV and tables
// go to `out` unless --out names a file; diagnostics go to `err`.
//
// Subcommands: validate, run, curves, sweep-temp, sweep-tau, heatmap.
// Returns 0 on success, 1 on runtime or validation failure, 2 on usage error.
int execute(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace qrl::cli
