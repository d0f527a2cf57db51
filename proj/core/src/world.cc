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

#include "islanders/world.h"

#include "islanders/errors.h"
#include "islanders/semantics.h"

namespace islanders {

std::vector<PersonId> World::GuiltySet() const {
  std::vector<PersonId> out;
  for (PersonId p = 0; p < static_cast<PersonId>(types.size()); ++p) {
    if (IsGuilty(p)) out.push_back(p);
  }
  return out;
}

StatementTable::StatementTable(const Puzzle& puzzle) : puzzle_(&puzzle) {
  for (const Statement& s : puzzle.statements) by_label_[s.label] = &s;
}

const Statement& StatementTable::Lookup(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) {
    throw ReferenceError("unknown statement '" + label + "'");
  }
  return *it->second;
}

const std::string& StatementTable::NameOf(PersonId p) const {
  if (p < 0 || p >= puzzle_->size()) {
    throw ReferenceError("unknown person #" + std::to_string(p));
  }
  return puzzle_->suspects[p];
}

namespace {

void CheckPerson(const World& world, PersonId p) {
  if (p < 0 || p >= static_cast<PersonId>(world.types.size())) {
    throw ReferenceError("unknown person #" + std::to_string(p));
  }
}

bool Eval(const World& world, const Formula& f, const StatementTable& table,
          int depth) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kGuilty:
      CheckPerson(world, f.person());
      return world.IsGuilty(f.person());
    case Kind::kHasType:
      CheckPerson(world, f.person());
      return world.types[f.person()] == f.type();
    case Kind::kFromIsland:
      CheckPerson(world, f.person());
      return IslandOf(world.types[f.person()]) == f.island();
    case Kind::kCount:
      return CompareCount(f.count_op(), world.GuiltyCount(), f.count());
    case Kind::kTruthful: {
      const Statement& target = table.Lookup(f.text());
      if (!target.modeled()) {
        throw ReferenceError("truthful(" + f.text() +
                             ") references an unmodeled statement");
      }
      // Acyclic puzzles never get close; this only trips on hand-built
      // cyclic input.
      if (depth > 1000) {
        throw ReferenceError("cyclic truthful reference through '" +
                             f.text() + "'");
      }
      return Eval(world, *target.body, table, depth + 1);
    }
    case Kind::kLiesAboutGuilt:
      CheckPerson(world, f.person());
      return LiesWhenAskedGuilt(world, f.person());
    case Kind::kKnowsWhodunit: {
      CheckPerson(world, f.person());
      auto it = world.knows_whodunit.find(f.person());
      if (it == world.knows_whodunit.end()) {
        throw ReferenceError("no knows_whodunit value for '" +
                             table.NameOf(f.person()) + "'");
      }
      return it->second;
    }
    case Kind::kFree: {
      auto it = world.free_values.find(f.text());
      if (it == world.free_values.end()) {
        throw ReferenceError("unknown free atom \"" + f.text() + "\"");
      }
      return it->second;
    }
    case Kind::kNot:
      return !Eval(world, f.operand(), table, depth);
    case Kind::kAnd:
      return Eval(world, f.lhs(), table, depth) &&
             Eval(world, f.rhs(), table, depth);
    case Kind::kOr:
      return Eval(world, f.lhs(), table, depth) ||
             Eval(world, f.rhs(), table, depth);
    case Kind::kImplies:
      return !Eval(world, f.lhs(), table, depth) ||
             Eval(world, f.rhs(), table, depth);
    case Kind::kIff:
      return Eval(world, f.lhs(), table, depth) ==
             Eval(world, f.rhs(), table, depth);
  }
  return false;
}

}  // namespace

bool EvalFormula(const World& world, const Formula& formula,
                 const StatementTable& table) {
  return Eval(world, formula, table, 0);
}

Formula SubstituteSelfGuilt(const Formula& formula, PersonId speaker,
                            bool value) {
  using Kind = Formula::Kind;
  if (!formula.MentionsGuiltyOf(speaker)) return formula;
  switch (formula.kind()) {
    case Kind::kGuilty:
      return Formula::Constant(value);
    case Kind::kNot:
      return Formula::Not(
          SubstituteSelfGuilt(formula.operand(), speaker, value));
    case Kind::kAnd:
      return Formula::And(SubstituteSelfGuilt(formula.lhs(), speaker, value),
                          SubstituteSelfGuilt(formula.rhs(), speaker, value));
    case Kind::kOr:
      return Formula::Or(SubstituteSelfGuilt(formula.lhs(), speaker, value),
                         SubstituteSelfGuilt(formula.rhs(), speaker, value));
    case Kind::kImplies:
      return Formula::Implies(
          SubstituteSelfGuilt(formula.lhs(), speaker, value),
          SubstituteSelfGuilt(formula.rhs(), speaker, value));
    case Kind::kIff:
      return Formula::Iff(SubstituteSelfGuilt(formula.lhs(), speaker, value),
                          SubstituteSelfGuilt(formula.rhs(), speaker, value));
    default:
      return formula;
  }
}

std::string DescribeWorld(const World& world, const Puzzle& puzzle) {
  std::string out = "types:";
  for (PersonId p = 0; p < static_cast<PersonId>(world.types.size()); ++p) {
    out += " ";
    out += p < puzzle.size() ? puzzle.suspects[p] : "#" + std::to_string(p);
    out += "=";
    out += ShortName(world.types[p]);
  }
  out += "; guilty: {";
  bool first = true;
  for (PersonId p : world.GuiltySet()) {
    if (!first) out += ", ";
    out += p < puzzle.size() ? puzzle.suspects[p] : "#" + std::to_string(p);
    first = false;
  }
  out += "}";
  if (!world.free_values.empty()) {
    out += "; free:";
    for (const auto& [name, value] : world.free_values) {
      out += " " + name + "=" + (value ? "true" : "false");
    }
  }
  if (!world.knows_whodunit.empty()) {
    out += "; knows_whodunit:";
    for (const auto& [p, value] : world.knows_whodunit) {
      out += " ";
      out += p < puzzle.size() ? puzzle.suspects[p] : "#" + std::to_string(p);
      out += std::string("=") + (value ? "true" : "false");
    }
  }
  return out;
}

}  // namespace islanders
