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

#include "islanders/semantics.h"

#include "islanders/errors.h"

namespace islanders {

AdmissibilityRule RuleFor(SpeakerType type) {
  using Mode = AdmissibilityRule::Mode;
  using Substitution = AdmissibilityRule::Substitution;
  switch (type) {
    case SpeakerType::kAbsoluteTruthTeller:
      return {type, Mode::kRequireTrue, Substitution::kNone};
    case SpeakerType::kPartialTruthTeller:
      return {type, Mode::kRequireTrue, Substitution::kSelfGuiltToFalse};
    case SpeakerType::kAbsoluteLiar:
      return {type, Mode::kRequireFalse, Substitution::kNone};
    case SpeakerType::kResponsibleLiar:
      return {type, Mode::kRequireFalse, Substitution::kSelfGuiltToFalse};
  }
  return {type, Mode::kRequireTrue, Substitution::kNone};
}

bool IsAdmissibleFor(SpeakerType type, const World& world, PersonId speaker,
                     const Formula& body, const StatementTable& table) {
  const AdmissibilityRule rule = RuleFor(type);
  const bool value =
      rule.substitution == AdmissibilityRule::Substitution::kSelfGuiltToFalse
          ? EvalFormula(world, SubstituteSelfGuilt(body, speaker, false),
                        table)
          : EvalFormula(world, body, table);
  return value == (rule.mode == AdmissibilityRule::Mode::kRequireTrue);
}

bool IsAdmissibleUtterance(const World& world, PersonId speaker,
                           const Formula& body, const StatementTable& table) {
  if (speaker < 0 || speaker >= static_cast<PersonId>(world.types.size())) {
    throw ReferenceError("unknown speaker #" + std::to_string(speaker));
  }
  return IsAdmissibleFor(world.types[speaker], world, speaker, body, table);
}

bool LiesWhenAskedGuilt(const World& world, PersonId person) {
  if (person < 0 || person >= static_cast<PersonId>(world.types.size())) {
    throw ReferenceError("unknown person #" + std::to_string(person));
  }
  return LiesWhenAskedGuilt(world.types[person], world.IsGuilty(person));
}

}  // namespace islanders
