// Copyright 2026 The stationplan Authors
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
#ifndef STATIONPLAN_CLI_H_
#define STATIONPLAN_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace stationplan::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kArgumentError = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kDataError = 4;

// Runs one subcommand. args excludes the program name. Results go to out
// (or --out), diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stationplan::cli

#endif  // STATIONPLAN_CLI_H_
