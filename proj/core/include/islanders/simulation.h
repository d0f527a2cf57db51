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

// Seeded Monte-Carlo runs of the interrogation strategies.

#ifndef ISLANDERS_SIMULATION_H_
#define ISLANDERS_SIMULATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islanders/interrogation.h"

namespace islanders {

enum class Strategy {
  kClassify,
  kAskAll,
  kCountKnown,
  kCountUnknown,
  kSolveTruthTellers,
  kSolveLiars,
  kSolveMixed,
  kNeil,
  kSecretAttribute,
};

std::string_view StrategyName(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view name);
const std::vector<Strategy>& AllStrategies();

// The island a strategy runs on when none is requested.
IslandMode DefaultIsland(Strategy strategy);

std::string_view IslandModeName(IslandMode mode);
std::optional<IslandMode> ParseIslandMode(std::string_view name);

struct SimulationConfig {
  Strategy strategy = Strategy::kSolveMixed;
  LiarsMode liars_mode = LiarsMode::kRobust;
  // world.seed is the base seed of the run.
  WorldConfig world;
  int trials = 1000;
};

struct TrialFailure {
  int trial = 0;
  std::uint64_t world_seed = 0;
  std::vector<PersonId> guilty;
  std::vector<PersonId> expected;
  StrategyResult result;
};

struct SimulationSummary {
  int trials = 0;
  int successes = 0;
  std::vector<TrialFailure> failures;
  int min_questions = 0;
  int max_questions = 0;
  std::int64_t total_questions = 0;
};

// Throws PreconditionError when no world generated from `config` can satisfy
// the strategy's premises, and ConfigError for infeasible parameters.
void CheckSimulationConfig(const SimulationConfig& config);

// The per-trial world seed; trials are independent given it.
std::uint64_t TrialSeed(std::uint64_t base_seed, int trial);

// Runs one strategy on one world and returns the accused set together with
// the set the strategy is expected to find.
struct TrialOutcome {
  StrategyResult result;
  std::vector<PersonId> expected;
  bool success() const { return result.accused == expected; }
};
TrialOutcome RunTrial(Strategy strategy, LiarsMode mode,
                      const KnowledgeWorld& world, std::uint64_t trial_seed);

SimulationSummary RunSimulation(const SimulationConfig& config);

}  // namespace islanders

#endif  // ISLANDERS_SIMULATION_H_
