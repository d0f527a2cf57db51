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

#ifndef ISLANDERS_SPEAKER_TYPE_H_
#define ISLANDERS_SPEAKER_TYPE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace islanders {

// The four behavioral types. Declaration order is the enumeration order used
// by the solver.
enum class SpeakerType : std::uint8_t {
  kAbsoluteTruthTeller = 0,
  kPartialTruthTeller = 1,
  kAbsoluteLiar = 2,
  kResponsibleLiar = 3,
};

enum class Island : std::uint8_t {
  kTruthTellers = 0,
  kLiars = 1,
};

inline constexpr std::array<SpeakerType, 4> kAllSpeakerTypes = {
    SpeakerType::kAbsoluteTruthTeller, SpeakerType::kPartialTruthTeller,
    SpeakerType::kAbsoluteLiar, SpeakerType::kResponsibleLiar};

constexpr Island IslandOf(SpeakerType type) {
  return (type == SpeakerType::kAbsoluteTruthTeller ||
          type == SpeakerType::kPartialTruthTeller)
             ? Island::kTruthTellers
             : Island::kLiars;
}

// "AT", "PT", "AL", "RL".
std::string_view ShortName(SpeakerType type);
std::string_view LongName(SpeakerType type);
std::optional<SpeakerType> ParseSpeakerType(std::string_view short_name);

// "truthtellers" / "liars".
std::string_view IslandName(Island island);
std::optional<Island> ParseIsland(std::string_view name);

// A subset of the four speaker types, stored as a bitmask.
class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr TypeSet(std::initializer_list<SpeakerType> types) {
    for (SpeakerType t : types) Insert(t);
  }

  static constexpr TypeSet All() { return FromMask(0b1111); }
  static constexpr TypeSet Of(Island island) {
    return island == Island::kTruthTellers
               ? TypeSet{SpeakerType::kAbsoluteTruthTeller,
                         SpeakerType::kPartialTruthTeller}
               : TypeSet{SpeakerType::kAbsoluteLiar,
                         SpeakerType::kResponsibleLiar};
  }
  static constexpr TypeSet FromMask(std::uint8_t mask) {
    TypeSet s;
    s.mask_ = mask & 0b1111;
    return s;
  }

  constexpr void Insert(SpeakerType t) {
    mask_ |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(t));
  }
  constexpr bool Contains(SpeakerType t) const {
    return (mask_ >> static_cast<unsigned>(t)) & 1u;
  }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (unsigned m = mask_; m != 0; m &= m - 1) ++n;
    return n;
  }
  constexpr std::uint8_t mask() const { return mask_; }

  // Members in declaration order.
  std::vector<SpeakerType> Members() const;

  friend constexpr bool operator==(TypeSet, TypeSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

// "{AT, PT}".
std::string ToString(TypeSet set);

}  // namespace islanders

#endif  // ISLANDERS_SPEAKER_TYPE_H_
