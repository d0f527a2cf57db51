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

#include "islanders/speaker_type.h"

namespace islanders {

std::string_view ShortName(SpeakerType type) {
  switch (type) {
    case SpeakerType::kAbsoluteTruthTeller:
      return "AT";
    case SpeakerType::kPartialTruthTeller:
      return "PT";
    case SpeakerType::kAbsoluteLiar:
      return "AL";
    case SpeakerType::kResponsibleLiar:
      return "RL";
  }
  return "?";
}

std::string_view LongName(SpeakerType type) {
  switch (type) {
    case SpeakerType::kAbsoluteTruthTeller:
      return "absolute truth-teller";
    case SpeakerType::kPartialTruthTeller:
      return "partial truth-teller";
    case SpeakerType::kAbsoluteLiar:
      return "absolute liar";
    case SpeakerType::kResponsibleLiar:
      return "responsible liar";
  }
  return "?";
}

std::optional<SpeakerType> ParseSpeakerType(std::string_view short_name) {
  for (SpeakerType t : kAllSpeakerTypes) {
    if (ShortName(t) == short_name) return t;
  }
  return std::nullopt;
}

std::string_view IslandName(Island island) {
  return island == Island::kTruthTellers ? "truthtellers" : "liars";
}

std::optional<Island> ParseIsland(std::string_view name) {
  if (name == "truthtellers") return Island::kTruthTellers;
  if (name == "liars") return Island::kLiars;
  return std::nullopt;
}

std::vector<SpeakerType> TypeSet::Members() const {
  std::vector<SpeakerType> out;
  for (SpeakerType t : kAllSpeakerTypes) {
    if (Contains(t)) out.push_back(t);
  }
  return out;
}

std::string ToString(TypeSet set) {
  std::string out = "{";
  bool first = true;
  for (SpeakerType t : set.Members()) {
    if (!first) out += ", ";
    out += ShortName(t);
    first = false;
  }
  return out + "}";
}

}  // namespace islanders
