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

// When may a speaker of a given type utter a given sentence?
//
// Absolute truth-tellers only say true things and absolute liars only false
// ones. Partial truth-tellers lie about their own guilt only: a sentence is
// read as if they were innocent, i.e. every guilty(self) atom is replaced by
// false, and the rest must be true. Responsible liars mirror that: after the
// same replacement the sentence must be false, so they always claim guilt.
// Only literal guilty(self) atoms count as questions about the speaker's own
// guilt; anything indirect is answered in character.

#ifndef ISLANDERS_SEMANTICS_H_
#define ISLANDERS_SEMANTICS_H_

#include "islanders/formula.h"
#include "islanders/speaker_type.h"
#include "islanders/world.h"

namespace islanders {

struct AdmissibilityRule {
  enum class Mode { kRequireTrue, kRequireFalse };
  enum class Substitution { kNone, kSelfGuiltToFalse };

  SpeakerType speaker_type;
  Mode mode;
  Substitution substitution;
};

AdmissibilityRule RuleFor(SpeakerType type);

// Whether `speaker`, with the type the world assigns, could say `body`.
bool IsAdmissibleUtterance(const World& world, PersonId speaker,
                           const Formula& body, const StatementTable& table);

// Same, for an explicit type and guilt status rather than the world's.
bool IsAdmissibleFor(SpeakerType type, const World& world, PersonId speaker,
                     const Formula& body, const StatementTable& table);

// Whether a person of this type lies when asked "are you guilty?".
constexpr bool LiesWhenAskedGuilt(SpeakerType type, bool guilty) {
  switch (type) {
    case SpeakerType::kAbsoluteTruthTeller:
      return false;
    case SpeakerType::kPartialTruthTeller:
      return guilty;
    case SpeakerType::kAbsoluteLiar:
      return true;
    case SpeakerType::kResponsibleLiar:
      return !guilty;
  }
  return false;
}

bool LiesWhenAskedGuilt(const World& world, PersonId person);

}  // namespace islanders

#endif  // ISLANDERS_SEMANTICS_H_
