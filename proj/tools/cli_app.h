// Copyright 2026 The Islanders Authors
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

#ifndef ISLANDERS_TOOLS_CLI_APP_H_
#define ISLANDERS_TOOLS_CLI_APP_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "islanders/simulation.h"
#include "islanders/solver.h"
#include "json.hpp"

namespace islanders::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMultiple = 2;
inline constexpr int kExitInconsistent = 3;

inline constexpr std::uint64_t kDefaultSeed = 20150101;

using Json = nlohmann::ordered_json;

Json ReportToJson(const SolveReport& report, const Puzzle& puzzle);
std::string ReportToText(const SolveReport& report, const Puzzle& puzzle);
int ExitCodeFor(Verdict verdict);

Json SimulationToJson(const SimulationConfig& config,
                      const SimulationSummary& summary);
std::string SimulationToText(const SimulationConfig& config,
                             const SimulationSummary& summary);

// Runs the tool with `args` (excluding the program name). Output goes to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace islanders::cli

#endif  // ISLANDERS_TOOLS_CLI_APP_H_
