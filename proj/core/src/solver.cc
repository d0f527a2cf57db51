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

#include "islanders/solver.h"

#include <limits>
#include <set>

#include "islanders/errors.h"
#include "islanders/semantics.h"

namespace islanders {

namespace {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t PowerOfTwo(std::size_t bits) {
  return bits >= 64 ? std::numeric_limits<std::uint64_t>::max()
                    : std::uint64_t{1} << bits;
}

// Whether the value of `f` can depend on free or knows_whodunit atoms,
// following truthful() references.
bool DependsOnAtoms(const Formula& f, const StatementTable& table) {
  bool depends = false;
  f.Visit([&](const Formula& g) {
    if (depends) return;
    switch (g.kind()) {
      case Formula::Kind::kFree:
      case Formula::Kind::kKnowsWhodunit:
        depends = true;
        break;
      case Formula::Kind::kTruthful:
        depends = DependsOnAtoms(*table.Lookup(g.text()).body, table);
        break;
      default:
        break;
    }
  });
  return depends;
}

// A statement or axiom prepared for repeated evaluation.
struct Constraint {
  // Statements: the body to evaluate for each possible speaker type, already
  // substituted for partial truth-tellers and responsible liars.
  PersonId speaker = -1;
  Formula plain;
  Formula substituted;
  bool atom_dependent = false;

  bool Holds(const World& world, const StatementTable& table) const {
    if (speaker < 0) return EvalFormula(world, plain, table);
    const AdmissibilityRule rule = RuleFor(world.types[speaker]);
    const bool value =
        rule.substitution == AdmissibilityRule::Substitution::kNone
            ? EvalFormula(world, plain, table)
            : EvalFormula(world, substituted, table);
    return value == (rule.mode == AdmissibilityRule::Mode::kRequireTrue);
  }
};

class Enumerator {
 public:
  Enumerator(const Puzzle& puzzle,
             const std::function<bool(const World&)>& visit)
      : puzzle_(puzzle), table_(puzzle), visit_(visit) {
    for (const Formula& axiom : puzzle.axioms) {
      Add(Constraint{.plain = axiom});
    }
    for (const Statement& s : puzzle.statements) {
      if (!s.modeled()) continue;
      Add(Constraint{.speaker = s.speaker,
                     .plain = *s.body,
                     .substituted = SubstituteSelfGuilt(*s.body, s.speaker,
                                                        false)});
    }
    world_.types.assign(puzzle.size(), SpeakerType::kAbsoluteTruthTeller);
    for (const std::string& name : puzzle.FreeAtoms()) {
      atom_slots_.push_back(&world_.free_values[name]);
    }
    for (PersonId p : puzzle.KnowsWhodunitPersons()) {
      knows_persons_.push_back(p);
      atom_slots_.push_back(&world_.knows_whodunit[p]);
    }
  }

  void Run() { AssignType(0); }

 private:
  void Add(Constraint c) {
    c.atom_dependent = DependsOnAtoms(c.plain, table_);
    (c.atom_dependent ? atom_constraints_ : fixed_constraints_)
        .push_back(std::move(c));
  }

  bool AssignType(PersonId p) {
    if (p == puzzle_.size()) {
      if (!puzzle_.type_cardinality.Admits(world_.types)) return true;
      return AssignGuilt();
    }
    for (SpeakerType t : kAllSpeakerTypes) {
      if (!puzzle_.type_domains[p].Contains(t)) continue;
      world_.types[p] = t;
      if (!AssignType(p + 1)) return false;
    }
    return true;
  }

  bool AssignGuilt() {
    const GuiltMask end = GuiltMask{1} << puzzle_.size();
    for (GuiltMask mask = 0; mask < end; ++mask) {
      world_.guilty = mask;
      if (!puzzle_.criminals.Admits(world_.GuiltyCount())) continue;
      if (!AllHold(fixed_constraints_)) continue;
      if (!AssignAtoms()) return false;
    }
    return true;
  }

  bool AssignAtoms() {
    const std::size_t f = atom_slots_.size();
    const std::uint64_t end = std::uint64_t{1} << f;
    for (std::uint64_t bits = 0; bits < end; ++bits) {
      for (std::size_t i = 0; i < f; ++i) {
        *atom_slots_[i] = (bits >> (f - 1 - i)) & 1u;
      }
      if (!KnowsAxiomHolds()) continue;
      if (!AllHold(atom_constraints_)) continue;
      if (!visit_(world_)) return false;
    }
    return true;
  }

  bool KnowsAxiomHolds() const {
    for (PersonId p : knows_persons_) {
      if (world_.IsGuilty(p) && !world_.knows_whodunit.at(p)) return false;
    }
    return true;
  }

  bool AllHold(const std::vector<Constraint>& constraints) const {
    for (const Constraint& c : constraints) {
      if (!c.Holds(world_, table_)) return false;
    }
    return true;
  }

  const Puzzle& puzzle_;
  StatementTable table_;
  const std::function<bool(const World&)>& visit_;
  World world_;
  std::vector<bool*> atom_slots_;
  std::vector<PersonId> knows_persons_;
  std::vector<Constraint> fixed_constraints_;
  std::vector<Constraint> atom_constraints_;
};

std::string Name(const Puzzle& puzzle, PersonId p) {
  return puzzle.suspects[p];
}

}  // namespace

std::uint64_t CandidateCount(const Puzzle& puzzle) {
  std::uint64_t count = 1;
  for (TypeSet domain : puzzle.type_domains) {
    count = SaturatingMul(count, static_cast<std::uint64_t>(domain.size()));
  }
  count = SaturatingMul(count, PowerOfTwo(puzzle.suspects.size()));
  const std::size_t atoms =
      puzzle.FreeAtoms().size() + puzzle.KnowsWhodunitPersons().size();
  return SaturatingMul(count, PowerOfTwo(atoms));
}

void EnumerateWorlds(const Puzzle& puzzle,
                     const std::function<bool(const World&)>& visit,
                     const SolverOptions& options) {
  puzzle.Validate();
  const std::uint64_t candidates = CandidateCount(puzzle);
  if (candidates > options.max_candidates) {
    throw SearchSpaceError(
        "puzzle has " +
        (candidates == std::numeric_limits<std::uint64_t>::max()
             ? std::string("more than 2^64")
             : std::to_string(candidates)) +
        " candidate worlds, above the ceiling of " +
        std::to_string(options.max_candidates));
  }
  Enumerator(puzzle, visit).Run();
}

std::vector<World> ConsistentWorlds(const Puzzle& puzzle,
                                    const SolverOptions& options) {
  std::vector<World> worlds;
  EnumerateWorlds(
      puzzle,
      [&](const World& w) {
        worlds.push_back(w);
        return true;
      },
      options);
  return worlds;
}

WorldCheck CheckWorld(const Puzzle& puzzle, const World& world) {
  puzzle.Validate();
  const int n = puzzle.size();
  if (static_cast<int>(world.types.size()) != n) {
    throw ReferenceError("world assigns " + std::to_string(world.types.size()) +
                         " types for " + std::to_string(n) + " suspects");
  }
  if ((world.guilty >> n) != 0) {
    throw ReferenceError("world marks a non-suspect as guilty");
  }
  const std::vector<std::string> free_atoms = puzzle.FreeAtoms();
  for (const auto& [name, value] : world.free_values) {
    if (!std::binary_search(free_atoms.begin(), free_atoms.end(), name)) {
      throw ReferenceError("unknown free atom \"" + name + "\"");
    }
  }
  for (const auto& [p, value] : world.knows_whodunit) {
    if (p < 0 || p >= n) {
      throw ReferenceError("knows_whodunit value for unknown person #" +
                           std::to_string(p));
    }
  }

  WorldCheck check;
  auto fail = [&](std::string what) {
    check.ok = false;
    check.violations.push_back(std::move(what));
  };

  // (a) types
  for (PersonId p = 0; p < n; ++p) {
    if (!puzzle.type_domains[p].Contains(world.types[p])) {
      fail("type domain: " + Name(puzzle, p) + "=" +
           std::string(ShortName(world.types[p])) + " not in " +
           ToString(puzzle.type_domains[p]));
    }
  }
  if (!puzzle.type_cardinality.Admits(world.types)) {
    fail("type cardinality");
  }
  // (b) count
  if (!puzzle.criminals.Admits(world.GuiltyCount())) {
    fail("criminal count: " + std::to_string(world.GuiltyCount()) +
         " guilty");
  }
  const StatementTable table(puzzle);
  // (c) axioms
  for (std::size_t i = 0; i < puzzle.axioms.size(); ++i) {
    if (!EvalFormula(world, puzzle.axioms[i], table)) {
      fail("axiom " + std::to_string(i + 1) + ": " +
           ToString(puzzle.axioms[i], puzzle.suspects));
    }
  }
  // (d) statements
  for (const Statement& s : puzzle.statements) {
    if (!s.modeled()) continue;
    if (!IsAdmissibleUtterance(world, s.speaker, *s.body, table)) {
      fail("statement " + s.label + " (" + Name(puzzle, s.speaker) + " as " +
           std::string(ShortName(world.types[s.speaker])) +
           "): " + ToString(*s.body, puzzle.suspects));
    }
  }
  // (e) criminals know whodunit
  for (PersonId p : puzzle.KnowsWhodunitPersons()) {
    auto it = world.knows_whodunit.find(p);
    if (it == world.knows_whodunit.end()) {
      throw ReferenceError("no knows_whodunit value for '" + Name(puzzle, p) +
                           "'");
    }
    if (world.IsGuilty(p) && !it->second) {
      fail("knows_whodunit: " + Name(puzzle, p) +
           " is guilty but does not know whodunit");
    }
  }
  return check;
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kUniqueWorld:
      return "UniqueWorld";
    case Verdict::kUniqueGuilt:
      return "UniqueGuilt";
    case Verdict::kMultiple:
      return "Multiple";
    case Verdict::kInconsistent:
      return "Inconsistent";
  }
  return "?";
}

SolveReport Solve(const Puzzle& puzzle, const SolverOptions& options) {
  const int n = puzzle.size();
  SolveReport report;
  report.puzzle_name = puzzle.name;

  GuiltMask always_guilty = ~GuiltMask{0};
  GuiltMask ever_guilty = 0;
  std::optional<GuiltMask> first_guilt;
  bool guilt_varies = false;
  std::vector<TypeSet> seen_types(n);
  std::set<std::uint8_t> seen_type_sets;

  EnumerateWorlds(
      puzzle,
      [&](const World& w) {
        ++report.consistent_world_count;
        always_guilty &= w.guilty;
        ever_guilty |= w.guilty;
        if (!first_guilt) {
          first_guilt = w.guilty;
        } else if (*first_guilt != w.guilty) {
          guilt_varies = true;
        }
        TypeSet present;
        for (PersonId p = 0; p < n; ++p) {
          seen_types[p].Insert(w.types[p]);
          present.Insert(w.types[p]);
        }
        seen_type_sets.insert(present.mask());
        return true;
      },
      options);

  for (const Statement& s : puzzle.statements) {
    if (!s.modeled()) {
      report.warnings.push_back("statement " + s.label + " (" +
                                Name(puzzle, s.speaker) +
                                ") is not modeled: \"" + s.unmodeled_text +
                                "\"");
    }
  }

  if (report.consistent_world_count == 0) {
    report.verdict = Verdict::kInconsistent;
    return report;
  }
  if (report.consistent_world_count == 1) {
    report.verdict = Verdict::kUniqueWorld;
  } else {
    report.verdict = guilt_varies ? Verdict::kMultiple : Verdict::kUniqueGuilt;
  }
  for (PersonId p = 0; p < n; ++p) {
    const bool always = (always_guilty >> p) & 1u;
    const bool ever = (ever_guilty >> p) & 1u;
    if (always) report.forced_guilty.push_back(p);
    if (!ever) report.forced_innocent.push_back(p);
    const bool type_forced = seen_types[p].size() == 1;
    if (type_forced) report.forced_types[p] = seen_types[p].Members().front();
    if (always != ever || !type_forced) report.unresolved.push_back(p);
  }
  if (seen_type_sets.size() == 1) {
    report.forced_type_set = TypeSet::FromMask(*seen_type_sets.begin());
  }
  return report;
}

}  // namespace islanders
