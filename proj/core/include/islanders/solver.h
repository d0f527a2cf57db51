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

// Exhaustive model enumeration for guilt-deduction puzzles.
//
// A candidate world fixes a type for every suspect, a guilt set, and a value
// for every free atom and every knows_whodunit atom the puzzle mentions. A
// candidate is consistent when
//   (a) types respect the per-suspect domains and the type cardinality rules,
//   (b) the number of guilty suspects satisfies the count constraint,
//   (c) every axiom holds,
//   (d) every modeled statement is an admissible utterance for its speaker,
//   (e) every guilty person knows whodunit.

#ifndef ISLANDERS_SOLVER_H_
#define ISLANDERS_SOLVER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "islanders/puzzle.h"
#include "islanders/world.h"

namespace islanders {

struct SolverOptions {
  // Upper bound on candidate worlds before the search is refused.
  std::uint64_t max_candidates = std::uint64_t{1} << 28;
};

// Number of candidates the enumeration would visit: the product of the type
// domain sizes, 2^n guilt sets and 2^f atom assignments. Saturates at
// UINT64_MAX.
std::uint64_t CandidateCount(const Puzzle& puzzle);

// Calls `visit` for every consistent world in deterministic order: types
// odometer-style in declaration order (first suspect varies slowest), then
// guilt masks ascending, then free atoms by name followed by knows_whodunit
// atoms by person, as a binary counter. `visit` returns false to stop early.
// Throws SearchSpaceError above the ceiling and InvalidPuzzleError for
// malformed puzzles.
void EnumerateWorlds(const Puzzle& puzzle,
                     const std::function<bool(const World&)>& visit,
                     const SolverOptions& options = {});

std::vector<World> ConsistentWorlds(const Puzzle& puzzle,
                                    const SolverOptions& options = {});

struct WorldCheck {
  bool ok = true;
  // One entry per violated constraint, e.g. "statement ashwin1 (Ashwin): ...".
  std::vector<std::string> violations;
};

// Independent verifier for a single fully specified world.
WorldCheck CheckWorld(const Puzzle& puzzle, const World& world);

enum class Verdict { kUniqueWorld, kUniqueGuilt, kMultiple, kInconsistent };

std::string_view VerdictName(Verdict verdict);

struct SolveReport {
  std::string puzzle_name;
  Verdict verdict = Verdict::kInconsistent;
  std::uint64_t consistent_world_count = 0;
  std::vector<PersonId> forced_guilty;
  std::vector<PersonId> forced_innocent;
  // Only for suspects whose type agrees across all consistent worlds.
  std::map<PersonId, SpeakerType> forced_types;
  // The set of types present, when it agrees across all consistent worlds.
  std::optional<TypeSet> forced_type_set;
  // Suspects whose guilt or type varies.
  std::vector<PersonId> unresolved;
  std::vector<std::string> warnings;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

SolveReport Solve(const Puzzle& puzzle, const SolverOptions& options = {});

}  // namespace islanders

#endif  // ISLANDERS_SOLVER_H_
