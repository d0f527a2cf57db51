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

#ifndef ISLANDERS_PUZZLE_H_
#define ISLANDERS_PUZZLE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islanders/formula.h"
#include "islanders/speaker_type.h"

namespace islanders {

struct Statement {
  std::string label;
  PersonId speaker = 0;
  // Absent for sentences carried verbatim but not modeled; those contribute no
  // constraint and surface as warnings.
  std::optional<Formula> body;
  std::string unmodeled_text;

  bool modeled() const { return body.has_value(); }

  friend bool operator==(const Statement&, const Statement&) = default;
};

// Constraint on the number of guilty suspects: either a comparison against a
// constant or membership in an explicit set of allowed counts.
struct CountConstraint {
  CountOp op = CountOp::kGe;
  int k = 1;
  std::vector<int> allowed;  // Sorted, unique. Non-empty selects set mode.

  bool IsSet() const { return !allowed.empty(); }
  bool Admits(int guilty_count) const;

  friend bool operator==(const CountConstraint&,
                         const CountConstraint&) = default;
};

// "Exactly n suspects have a type in `types`."
struct ExactTypeCount {
  int n = 0;
  TypeSet types;

  friend bool operator==(const ExactTypeCount&,
                         const ExactTypeCount&) = default;
};

struct TypeCardinality {
  bool one_of_each = false;
  std::vector<ExactTypeCount> exact;
  std::optional<int> at_most_distinct;

  bool empty() const {
    return !one_of_each && exact.empty() && !at_most_distinct.has_value();
  }
  bool Admits(const std::vector<SpeakerType>& types) const;

  friend bool operator==(const TypeCardinality&,
                         const TypeCardinality&) = default;
};

class Puzzle {
 public:
  std::string name;
  std::vector<std::string> suspects;
  // One entry per suspect.
  std::vector<TypeSet> type_domains;
  CountConstraint criminals;
  std::vector<Statement> statements;
  std::vector<Formula> axioms;
  TypeCardinality type_cardinality;

  int size() const { return static_cast<int>(suspects.size()); }

  std::optional<PersonId> FindSuspect(std::string_view name) const;
  const Statement* FindStatement(std::string_view label) const;

  // Sorted names of the free atoms mentioned anywhere in the puzzle.
  std::vector<std::string> FreeAtoms() const;
  // Ascending ids of persons mentioned in a knows_whodunit atom.
  std::vector<PersonId> KnowsWhodunitPersons() const;

  // Throws InvalidPuzzleError or ReferenceError when an invariant fails:
  // non-empty unique suspects, non-empty type domains, unique labels, all
  // references resolvable, truthful() only pointing at earlier statements.
  void Validate() const;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

}  // namespace islanders

#endif  // ISLANDERS_PUZZLE_H_
