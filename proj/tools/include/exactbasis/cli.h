// Copyright 2026 The Authors.
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

// Command-line front end. Every command prints one result document on
// standard output and returns 0 (found or pass), 2 (infeasible), 1 (usage or
// input error) or 3 (internal alarm).

#ifndef EXACTBASIS_CLI_H_
#define EXACTBASIS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace exactbasis::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitAlarm = 3;

// args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace exactbasis::cli

#endif  // EXACTBASIS_CLI_H_
