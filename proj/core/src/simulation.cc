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

#include "islanders/simulation.h"

#include <algorithm>
#include <array>
#include <utility>

#include "islanders/errors.h"
#include "random.h"

namespace islanders {

namespace {

struct StrategyEntry {
  Strategy strategy;
  std::string_view name;
  IslandMode island;
};

constexpr std::array<StrategyEntry, 9> kStrategies = {{
    {Strategy::kClassify, "classify", IslandMode::kMixed},
    {Strategy::kAskAll, "ask_all", IslandMode::kTruthTellers},
    {Strategy::kCountKnown, "count_known", IslandMode::kTruthTellers},
    {Strategy::kCountUnknown, "count_unknown", IslandMode::kTruthTellers},
    {Strategy::kSolveTruthTellers, "solve_truthtellers",
     IslandMode::kTruthTellers},
    {Strategy::kSolveLiars, "solve_liars", IslandMode::kLiars},
    {Strategy::kSolveMixed, "solve_mixed", IslandMode::kMixed},
    {Strategy::kNeil, "neil", IslandMode::kTruthTellers},
    {Strategy::kSecretAttribute, "secret_attribute", IslandMode::kTruthTellers},
}};

const StrategyEntry& EntryOf(Strategy strategy) {
  for (const StrategyEntry& e : kStrategies) {
    if (e.strategy == strategy) return e;
  }
  return kStrategies.front();
}

void Refuse(Strategy strategy, const std::string& premise) {
  throw PreconditionError(std::string(StrategyName(strategy)) + ": " +
                          premise);
}

// Criminals that at least one other person knows about.
std::vector<PersonId> KnownByOthers(const KnowledgeWorld& kw) {
  std::vector<PersonId> out;
  for (PersonId q = 0; q < kw.size(); ++q) {
    if (!kw.guilty(q)) continue;
    for (PersonId p = 0; p < kw.size(); ++p) {
      if (p != q && kw.knowledge(p, q) == Knowledge::kKnowsGuilty) {
        out.push_back(q);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  return EntryOf(strategy).name;
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (const StrategyEntry& e : kStrategies) {
    if (e.name == name) return e.strategy;
  }
  return std::nullopt;
}

const std::vector<Strategy>& AllStrategies() {
  static const std::vector<Strategy> all = [] {
    std::vector<Strategy> v;
    for (const StrategyEntry& e : kStrategies) v.push_back(e.strategy);
    return v;
  }();
  return all;
}

IslandMode DefaultIsland(Strategy strategy) { return EntryOf(strategy).island; }

std::string_view IslandModeName(IslandMode mode) {
  switch (mode) {
    case IslandMode::kTruthTellers:
      return "tt";
    case IslandMode::kLiars:
      return "liars";
    case IslandMode::kMixed:
      return "mixed";
  }
  return "?";
}

std::optional<IslandMode> ParseIslandMode(std::string_view name) {
  if (name == "tt" || name == "truthtellers") return IslandMode::kTruthTellers;
  if (name == "liars") return IslandMode::kLiars;
  if (name == "mixed") return IslandMode::kMixed;
  return std::nullopt;
}

void CheckSimulationConfig(const SimulationConfig& config) {
  const WorldConfig& w = config.world;
  if (config.trials < 0) throw ConfigError("trials must be non-negative");
  if (w.n < 1 || w.n > 64) throw ConfigError("n must be between 1 and 64");
  if (w.min_criminals < 1 || w.min_criminals > w.max_criminals ||
      w.max_criminals > w.n) {
    throw ConfigError("criminal count range " +
                      std::to_string(w.min_criminals) + "-" +
                      std::to_string(w.max_criminals) + " is infeasible for " +
                      std::to_string(w.n) + " persons");
  }
  if (!(w.knowledge_density >= 0.0 && w.knowledge_density <= 1.0)) {
    throw ConfigError("knowledge density must lie in [0, 1]");
  }
  const Strategy s = config.strategy;
  const bool ignorant = w.knowledge_density == 0.0;
  switch (s) {
    case Strategy::kClassify:
    case Strategy::kSolveMixed:
      break;
    case Strategy::kAskAll:
      if (w.count_public) {
        Refuse(s, "a public count lets answers reveal criminals nobody knows "
                  "about");
      }
      break;
    case Strategy::kCountKnown:
      if (!w.count_public) Refuse(s, "the number of criminals must be public");
      if (!ignorant) Refuse(s, "requires that nobody knows about anybody else");
      if (w.island == IslandMode::kMixed) {
        Refuse(s, "requires everyone from the same island");
      }
      break;
    case Strategy::kCountUnknown:
      if (w.count_public) {
        Refuse(s, "the number of criminals must not be public");
      }
      if (!ignorant) Refuse(s, "requires that nobody knows about anybody else");
      if (w.island == IslandMode::kMixed) {
        Refuse(s, "requires everyone from the same island");
      }
      break;
    case Strategy::kSolveTruthTellers:
      if (w.island != IslandMode::kTruthTellers) {
        Refuse(s, "requires everyone from truthtellers island");
      }
      break;
    case Strategy::kSolveLiars:
      if (w.island != IslandMode::kLiars) {
        Refuse(s, "requires everyone from liars island");
      }
      if (config.liars_mode == LiarsMode::kPaperLiteral && !ignorant) {
        Refuse(s, "the literal list question requires that nobody knows "
                  "about anybody else");
      }
      break;
    case Strategy::kNeil:
      if (w.min_criminals != 1 || w.max_criminals != 1) {
        Refuse(s, "requires exactly one criminal");
      }
      if (!ignorant) Refuse(s, "requires that nobody knows about anybody else");
      if (w.island == IslandMode::kMixed) {
        Refuse(s, "requires everyone from the same island");
      }
      break;
    case Strategy::kSecretAttribute:
      if (w.island != IslandMode::kTruthTellers) {
        Refuse(s, "open-ended answers are unreliable off the truth-tellers' "
                  "island");
      }
      break;
  }
}

std::uint64_t TrialSeed(std::uint64_t base_seed, int trial) {
  return internal::SplitMix64(internal::SplitMix64(base_seed) ^
                              static_cast<std::uint64_t>(trial));
}

TrialOutcome RunTrial(Strategy strategy, LiarsMode mode,
                      const KnowledgeWorld& world, std::uint64_t trial_seed) {
  Adversary adversary(internal::SplitMix64(trial_seed ^ 0xA5A5A5A5A5A5A5A5ull));
  std::mt19937_64 lists(internal::SplitMix64(trial_seed ^ 0x5A5A5A5A5A5A5A5Aull));
  TrialOutcome out;
  out.expected = world.GuiltySet();
  switch (strategy) {
    case Strategy::kClassify: {
      const std::vector<Island> islands =
          ClassifyIslands(world, adversary, &out.result);
      for (PersonId p = 0; p < world.size(); ++p) {
        if (islands[p] == Island::kLiars) out.result.accused.push_back(p);
      }
      out.expected.clear();
      for (PersonId p = 0; p < world.size(); ++p) {
        if (world.island(p) == Island::kLiars) out.expected.push_back(p);
      }
      break;
    }
    case Strategy::kAskAll:
      out.result = AskAllAboutOthers(world, adversary);
      out.expected = KnownByOthers(world);
      break;
    case Strategy::kCountKnown:
      out.result = CountKnown(world, adversary);
      break;
    case Strategy::kCountUnknown:
      out.result = CountUnknown(world, adversary);
      break;
    case Strategy::kSolveTruthTellers:
      out.result = SolveTruthTellers(world, adversary);
      break;
    case Strategy::kSolveLiars:
      out.result = SolveLiars(world, adversary, mode, &lists);
      break;
    case Strategy::kSolveMixed:
      out.result = SolveMixed(world, adversary);
      break;
    case Strategy::kNeil:
      try {
        SolveLoneCriminal(world, adversary, &out.result);
      } catch (const PreconditionError&) {
        // Nobody or several singled out: counts as a failed trial.
        if (world.GuiltyCount() != 1) throw;
        out.result.accused.clear();
      }
      break;
    case Strategy::kSecretAttribute:
      out.result = SolveBySecret(world, adversary);
      break;
  }
  std::sort(out.result.accused.begin(), out.result.accused.end());
  return out;
}

SimulationSummary RunSimulation(const SimulationConfig& config) {
  CheckSimulationConfig(config);
  SimulationSummary summary;
  summary.trials = config.trials;
  for (int t = 0; t < config.trials; ++t) {
    WorldConfig wc = config.world;
    wc.seed = TrialSeed(config.world.seed, t);
    if (config.strategy == Strategy::kSecretAttribute) wc.secret = true;
    const KnowledgeWorld world = GenerateKnowledgeWorld(wc);
    TrialOutcome outcome =
        RunTrial(config.strategy, config.liars_mode, world, wc.seed);
    const int asked = outcome.result.questions_asked;
    if (t == 0) {
      summary.min_questions = summary.max_questions = asked;
    } else {
      summary.min_questions = std::min(summary.min_questions, asked);
      summary.max_questions = std::max(summary.max_questions, asked);
    }
    summary.total_questions += asked;
    if (outcome.success()) {
      ++summary.successes;
    } else {
      summary.failures.push_back({t, wc.seed, world.GuiltySet(),
                                  std::move(outcome.expected),
                                  std::move(outcome.result)});
    }
  }
  return summary;
}

}  // namespace islanders
