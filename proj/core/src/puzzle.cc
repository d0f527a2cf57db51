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

#include "islanders/puzzle.h"

#include <algorithm>
#include <set>

#include "islanders/errors.h"
#include "islanders/world.h"

namespace islanders {

bool CountConstraint::Admits(int guilty_count) const {
  if (IsSet()) {
    return std::binary_search(allowed.begin(), allowed.end(), guilty_count);
  }
  return CompareCount(op, guilty_count, k);
}

bool TypeCardinality::Admits(const std::vector<SpeakerType>& types) const {
  int per_type[4] = {0, 0, 0, 0};
  for (SpeakerType t : types) ++per_type[static_cast<int>(t)];
  if (one_of_each) {
    for (int c : per_type) {
      if (c != 1) return false;
    }
  }
  for (const ExactTypeCount& rule : exact) {
    int n = 0;
    for (SpeakerType t : kAllSpeakerTypes) {
      if (rule.types.Contains(t)) n += per_type[static_cast<int>(t)];
    }
    if (n != rule.n) return false;
  }
  if (at_most_distinct.has_value()) {
    int distinct = 0;
    for (int c : per_type) distinct += c > 0 ? 1 : 0;
    if (distinct > *at_most_distinct) return false;
  }
  return true;
}

std::optional<PersonId> Puzzle::FindSuspect(std::string_view name) const {
  for (PersonId p = 0; p < size(); ++p) {
    if (suspects[p] == name) return p;
  }
  return std::nullopt;
}

const Statement* Puzzle::FindStatement(std::string_view label) const {
  for (const Statement& s : statements) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

namespace {

template <typename Fn>
void ForEachFormula(const Puzzle& puzzle, Fn&& fn) {
  for (const Statement& s : puzzle.statements) {
    if (s.modeled()) fn(*s.body);
  }
  for (const Formula& axiom : puzzle.axioms) fn(axiom);
}

}  // namespace

std::vector<std::string> Puzzle::FreeAtoms() const {
  std::set<std::string> names;
  ForEachFormula(*this, [&](const Formula& root) {
    root.Visit([&](const Formula& f) {
      if (f.kind() == Formula::Kind::kFree) names.insert(f.text());
    });
  });
  return {names.begin(), names.end()};
}

std::vector<PersonId> Puzzle::KnowsWhodunitPersons() const {
  std::set<PersonId> people;
  ForEachFormula(*this, [&](const Formula& root) {
    root.Visit([&](const Formula& f) {
      if (f.kind() == Formula::Kind::kKnowsWhodunit) people.insert(f.person());
    });
  });
  return {people.begin(), people.end()};
}

namespace {

// Checks the references of one formula. 'earlier' is the number of statements
// a truthful() atom may point into; statements later than that are rejected.
void ValidateFormula(const Puzzle& puzzle, const Formula& root,
                     std::size_t earlier, const std::string& where) {
  root.Visit([&](const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kGuilty:
      case Formula::Kind::kHasType:
      case Formula::Kind::kFromIsland:
      case Formula::Kind::kLiesAboutGuilt:
      case Formula::Kind::kKnowsWhodunit:
        if (f.person() < 0 || f.person() >= puzzle.size()) {
          throw ReferenceError(where + ": unknown person #" +
                               std::to_string(f.person()));
        }
        break;
      case Formula::Kind::kCount:
        if (f.count() < 0) {
          throw InvalidPuzzleError(where + ": negative count");
        }
        break;
      case Formula::Kind::kTruthful: {
        auto it = std::find_if(
            puzzle.statements.begin(), puzzle.statements.end(),
            [&](const Statement& s) { return s.label == f.text(); });
        if (it == puzzle.statements.end()) {
          throw ReferenceError(where + ": unknown statement '" + f.text() +
                               "'");
        }
        if (static_cast<std::size_t>(it - puzzle.statements.begin()) >=
            earlier) {
          throw InvalidPuzzleError(where + ": truthful(" + f.text() +
                                   ") must reference an earlier statement");
        }
        if (!it->modeled()) {
          throw InvalidPuzzleError(where + ": truthful(" + f.text() +
                                   ") references an unmodeled statement");
        }
        break;
      }
      default:
        break;
    }
  });
}

}  // namespace

void Puzzle::Validate() const {
  if (suspects.empty()) throw InvalidPuzzleError("puzzle has no suspects");
  if (size() > kMaxSuspects) {
    throw InvalidPuzzleError("too many suspects (at most " +
                             std::to_string(kMaxSuspects) + ")");
  }
  std::set<std::string> seen;
  for (const std::string& s : suspects) {
    if (s.empty()) throw InvalidPuzzleError("empty suspect name");
    if (!seen.insert(s).second) {
      throw InvalidPuzzleError("duplicate suspect '" + s + "'");
    }
  }
  if (type_domains.size() != suspects.size()) {
    throw InvalidPuzzleError("type domain count does not match suspects");
  }
  for (PersonId p = 0; p < size(); ++p) {
    if (type_domains[p].empty()) {
      throw InvalidPuzzleError("empty type domain for '" + suspects[p] + "'");
    }
  }
  if (criminals.IsSet()) {
    for (int c : criminals.allowed) {
      if (c < 0) throw InvalidPuzzleError("negative criminal count");
    }
    if (!std::is_sorted(criminals.allowed.begin(), criminals.allowed.end()) ||
        std::adjacent_find(criminals.allowed.begin(),
                           criminals.allowed.end()) !=
            criminals.allowed.end()) {
      throw InvalidPuzzleError("criminal count set must be sorted and unique");
    }
  } else if (criminals.k < 0) {
    throw InvalidPuzzleError("negative criminal count");
  }
  for (const ExactTypeCount& rule : type_cardinality.exact) {
    if (rule.n < 0 || rule.types.empty()) {
      throw InvalidPuzzleError("malformed typecount rule");
    }
  }
  if (type_cardinality.at_most_distinct.has_value() &&
      *type_cardinality.at_most_distinct < 0) {
    throw InvalidPuzzleError("malformed at_most_distinct rule");
  }

  std::set<std::string> labels;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    if (s.label.empty()) throw InvalidPuzzleError("empty statement label");
    if (!labels.insert(s.label).second) {
      throw InvalidPuzzleError("duplicate statement label '" + s.label + "'");
    }
    if (s.speaker < 0 || s.speaker >= size()) {
      throw ReferenceError("statement " + s.label + ": unknown speaker #" +
                           std::to_string(s.speaker));
    }
    if (s.modeled()) {
      ValidateFormula(*this, *s.body, i, "statement " + s.label);
    }
  }
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    ValidateFormula(*this, axioms[i], statements.size(),
                    "axiom " + std::to_string(i + 1));
  }
}

}  // namespace islanders
