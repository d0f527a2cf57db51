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

#ifndef ISLANDERS_WORLD_H_
#define ISLANDERS_WORLD_H_

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "islanders/formula.h"
#include "islanders/puzzle.h"
#include "islanders/speaker_type.h"

namespace islanders {

// Guilt sets are bitmasks over suspect ids; bit i is suspect i.
using GuiltMask = std::uint64_t;
inline constexpr int kMaxSuspects = 63;

// One candidate resolution of a puzzle.
struct World {
  std::vector<SpeakerType> types;
  GuiltMask guilty = 0;
  std::map<std::string, bool> free_values;
  // Values of knows_whodunit(p) for the persons the puzzle mentions.
  std::map<PersonId, bool> knows_whodunit;

  bool IsGuilty(PersonId p) const { return (guilty >> p) & 1u; }
  void SetGuilty(PersonId p, bool value) {
    if (value) {
      guilty |= GuiltMask{1} << p;
    } else {
      guilty &= ~(GuiltMask{1} << p);
    }
  }
  int GuiltyCount() const { return std::popcount(guilty); }
  std::vector<PersonId> GuiltySet() const;

  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World&, const World&) = default;
};

// Label lookup over a puzzle's statements, plus the suspect names used for
// error messages. Holds a reference; the puzzle must outlive it.
class StatementTable {
 public:
  explicit StatementTable(const Puzzle& puzzle);

  const Puzzle& puzzle() const { return *puzzle_; }
  // Throws ReferenceError for unknown labels.
  const Statement& Lookup(const std::string& label) const;
  const std::string& NameOf(PersonId p) const;

 private:
  const Puzzle* puzzle_;
  std::unordered_map<std::string, const Statement*> by_label_;
};

// Classical evaluation. Truthful(label) evaluates the referenced statement's
// body in the same world at face value. LiesAboutGuilt follows the speaker
// type table. Throws ReferenceError on unknown persons, labels, free atoms,
// unmodeled truthful targets or missing knows_whodunit values.
bool EvalFormula(const World& world, const Formula& formula,
                 const StatementTable& table);

// Replaces every guilty(speaker) atom by the constant `value`, leaving all
// other atoms alone. Truthful references are not followed.
Formula SubstituteSelfGuilt(const Formula& formula, PersonId speaker,
                            bool value);

// One-line human-readable form, e.g. "types: A=AT B=PT; guilty: {A}".
std::string DescribeWorld(const World& world, const Puzzle& puzzle);

}  // namespace islanders

#endif  // ISLANDERS_WORLD_H_
