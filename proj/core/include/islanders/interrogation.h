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

// Detective interrogation over knowledge worlds.
//
// Every person knows their own guilt and, optionally, the guilt status of some
// others. A possibility question asks whether some criminal set S is
// consistent with what the askee knows, where S ranges over the non-empty
// sets that contain the askee iff the askee is guilty, contain everyone the
// askee knows to be guilty, exclude everyone known innocent, and have the
// public criminal count when there is one.

#ifndef ISLANDERS_INTERROGATION_H_
#define ISLANDERS_INTERROGATION_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "islanders/formula.h"
#include "islanders/speaker_type.h"

namespace islanders {

enum class Knowledge : std::uint8_t { kUnknown, kKnowsGuilty, kKnowsInnocent };

class KnowledgeWorld {
 public:
  // Throws ConfigError unless the invariants hold: non-empty guilt set,
  // factive knowledge, count_public == |guilty| when present.
  KnowledgeWorld(std::vector<SpeakerType> types, std::vector<bool> guilty,
                 std::vector<std::vector<Knowledge>> knowledge,
                 std::optional<int> count_public = std::nullopt,
                 std::optional<std::string> secret = std::nullopt);

  // Everyone ignorant of everyone else.
  static KnowledgeWorld Ignorant(std::vector<SpeakerType> types,
                                 std::vector<bool> guilty,
                                 std::optional<int> count_public = std::nullopt,
                                 std::optional<std::string> secret =
                                     std::nullopt);

  int size() const { return static_cast<int>(types_.size()); }
  SpeakerType type(PersonId p) const { return types_[p]; }
  Island island(PersonId p) const { return IslandOf(types_[p]); }
  bool guilty(PersonId p) const { return guilty_[p]; }
  // knowledge(p, p) is always reported from p's own guilt.
  Knowledge knowledge(PersonId p, PersonId q) const;
  const std::optional<int>& count_public() const { return count_public_; }
  const std::optional<std::string>& secret() const { return secret_; }

  const std::vector<SpeakerType>& types() const { return types_; }
  std::vector<PersonId> GuiltySet() const;
  int GuiltyCount() const;
  bool AllIgnorant() const;
  // Island shared by everyone, if any.
  std::optional<Island> CommonIsland() const;

  friend bool operator==(const KnowledgeWorld&,
                         const KnowledgeWorld&) = default;

 private:
  std::vector<SpeakerType> types_;
  std::vector<bool> guilty_;
  std::vector<std::vector<Knowledge>> knowledge_;
  std::optional<int> count_public_;
  std::optional<std::string> secret_;
};

struct Question {
  enum class Kind {
    kKnownFact,                  // "Is two plus two four?"
    kDirectGuilt,                // "Are you guilty?"
    kPossibleSubset,             // Could the criminals all be inside L?
    kPossibleExact,              // Could L be exactly the criminals?
    kPossibleSizeExcludingSelf,  // Could m people other than you have done it?
    kPossibleInnocent,           // Could q be innocent?
    kDidDetectiveDoIt,           // "Did I do it?"
    kDetectivePossible,          // "Is it possible that I committed it?"
    kSecretAttribute,            // "What color was the stolen candy?"
  };

  Kind kind = Kind::kKnownFact;
  bool fact = true;
  std::vector<PersonId> people;  // L, sorted
  int m = 0;
  PersonId target = 0;

  static Question KnownFact(bool value);
  static Question DirectGuilt();
  static Question PossibleSubset(std::vector<PersonId> people);
  static Question PossibleExact(std::vector<PersonId> people);
  static Question PossibleSizeExcludingSelf(int m);
  static Question PossibleInnocent(PersonId q);
  static Question DidDetectiveDoIt();
  static Question DetectivePossible();
  static Question SecretAttribute();

  bool IsYesNo() const { return kind != Kind::kSecretAttribute; }

  friend bool operator==(const Question&, const Question&) = default;
};

std::string ToString(const Question& question);

struct Answer {
  enum class Kind { kYes, kNo, kUnknown, kToken };

  Kind kind = Kind::kUnknown;
  std::string token;

  static Answer Yes() { return {Kind::kYes, {}}; }
  static Answer No() { return {Kind::kNo, {}}; }
  static Answer Unknown() { return {Kind::kUnknown, {}}; }
  static Answer Token(std::string value) { return {Kind::kToken, std::move(value)}; }
  static Answer FromBool(bool yes) { return yes ? Yes() : No(); }

  friend bool operator==(const Answer&, const Answer&) = default;
};

std::string ToString(const Answer& answer);

// What p would say if p told the truth as far as p knows it. Throws
// ConfigError for SecretAttribute without a configured secret.
Answer TruthfulAnswer(const KnowledgeWorld& kw, PersonId p, const Question& q);

// Source of the liars' arbitrary choices where no truthful answer exists.
using Adversary = std::mt19937_64;

// What p actually says, given p's type.
Answer SpokenAnswer(const KnowledgeWorld& kw, PersonId p, const Question& q,
                    Adversary& adversary);

struct TranscriptEntry {
  PersonId person = 0;
  Question question;
  Answer answer;

  friend bool operator==(const TranscriptEntry&,
                         const TranscriptEntry&) = default;
};

struct StrategyResult {
  std::vector<PersonId> accused;  // sorted
  std::vector<TranscriptEntry> transcript;
  int questions_asked = 0;
};

// Asks a question with a known answer; returns the island each person
// answered from.
std::vector<Island> ClassifyIslands(const KnowledgeWorld& kw,
                                    Adversary& adversary,
                                    StrategyResult* result = nullptr);

// Asks every person about every other person. Accuses exactly the criminals
// somebody else knows about. Islands are taken from the common island, or
// classified first when the crowd is mixed.
StrategyResult AskAllAboutOthers(const KnowledgeWorld& kw,
                                 Adversary& adversary);

// Public count m, nobody knows about anybody: "could m people other than you
// have done it?".
StrategyResult CountKnown(const KnowledgeWorld& kw, Adversary& adversary);

// Unknown count, nobody knows about anybody: "could everyone have done it?".
StrategyResult CountUnknown(const KnowledgeWorld& kw, Adversary& adversary);

// Truth-tellers: ask about others, then ask every unidentified person whether
// the criminals could all be among the other people.
StrategyResult SolveTruthTellers(const KnowledgeWorld& kw,
                                 Adversary& adversary);

enum class LiarsMode {
  kRobust,        // PossibleSubset(everyone except p)
  kPaperLiteral,  // PossibleExact(random list excluding p)
};

// `list_source` draws the random lists of the literal mode.
StrategyResult SolveLiars(const KnowledgeWorld& kw, Adversary& adversary,
                          LiarsMode mode = LiarsMode::kRobust,
                          std::mt19937_64* list_source = nullptr);

// Classify, then one possibility question per person. At most 2n questions.
StrategyResult SolveMixed(const KnowledgeWorld& kw, Adversary& adversary);

// Exactly one criminal, nobody knows anybody, a single island. Truth-tellers
// are asked "did I do it?", liars "is it possible that I did it?".
PersonId SolveLoneCriminal(const KnowledgeWorld& kw, Adversary& adversary,
                           StrategyResult* result = nullptr);

// Truth-tellers with a secret only the criminals know.
StrategyResult SolveBySecret(const KnowledgeWorld& kw, Adversary& adversary);

enum class IslandMode { kTruthTellers, kLiars, kMixed };

struct WorldConfig {
  int n = 5;
  IslandMode island = IslandMode::kMixed;
  int min_criminals = 1;
  int max_criminals = 1;
  double knowledge_density = 0.0;
  bool count_public = false;
  bool secret = false;
  std::uint64_t seed = 0;
};

// Deterministic per config. Throws ConfigError for infeasible configs.
KnowledgeWorld GenerateKnowledgeWorld(const WorldConfig& config);

}  // namespace islanders

#endif  // ISLANDERS_INTERROGATION_H_
