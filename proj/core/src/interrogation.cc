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

#include "islanders/interrogation.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string_view>

#include "islanders/errors.h"
#include "islanders/semantics.h"
#include "random.h"

namespace islanders {

namespace {

using Mask = std::uint64_t;

constexpr std::array<std::string_view, 9> kColors = {
    "red",  "orange", "yellow", "green", "blue",
    "purple", "pink", "white",  "black"};

Mask Bit(PersonId p) { return Mask{1} << p; }

Mask Everyone(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Mask ToMask(const std::vector<PersonId>& people) {
  Mask m = 0;
  for (PersonId p : people) m |= Bit(p);
  return m;
}

std::vector<PersonId> FromMask(Mask m) {
  std::vector<PersonId> out;
  for (PersonId p = 0; m != 0; ++p, m >>= 1) {
    if (m & 1u) out.push_back(p);
  }
  return out;
}

// What p knows: who must be in the criminal set and who must be out.
struct Belief {
  Mask in = 0;
  Mask out = 0;
  std::optional<int> count;
};

Belief BeliefOf(const KnowledgeWorld& kw, PersonId p) {
  Belief b;
  b.count = kw.count_public();
  for (PersonId q = 0; q < kw.size(); ++q) {
    switch (kw.knowledge(p, q)) {
      case Knowledge::kKnowsGuilty:
        b.in |= Bit(q);
        break;
      case Knowledge::kKnowsInnocent:
        b.out |= Bit(q);
        break;
      case Knowledge::kUnknown:
        break;
    }
  }
  return b;
}

// Is there a compatible S with in ⊆ S ⊆ allowed?
bool Exists(const Belief& b, Mask allowed) {
  allowed &= ~b.out;
  if ((b.in & ~allowed) != 0) return false;
  const int lo = std::popcount(b.in);
  const int hi = std::popcount(allowed);
  if (b.count) return *b.count >= 1 && lo <= *b.count && *b.count <= hi;
  return hi >= 1;
}

// Whether p can name every criminal. The detective is an outsider the
// islanders cannot rule out, so without a public count nobody can.
bool KnowsWholeSet(const Belief& b) {
  return b.count && std::popcount(b.in) == *b.count;
}

Answer Flip(const Answer& truthful, const Question& q, const KnowledgeWorld& kw,
            Adversary& adversary) {
  switch (truthful.kind) {
    case Answer::Kind::kYes:
      return Answer::No();
    case Answer::Kind::kNo:
      return Answer::Yes();
    case Answer::Kind::kUnknown:
      if (q.IsYesNo()) {
        return Answer::FromBool(internal::UniformInt(adversary, 0, 1) == 1);
      }
      break;
    case Answer::Kind::kToken:
      break;
  }
  // An open question: any token but the right one.
  std::vector<std::string_view> wrong;
  for (std::string_view c : kColors) {
    if (!kw.secret() || c != *kw.secret()) wrong.push_back(c);
  }
  return Answer::Token(
      std::string(wrong[internal::UniformInt(adversary, 0, wrong.size() - 1)]));
}

void Record(StrategyResult* result, PersonId p, const Question& q,
            const Answer& a) {
  if (result == nullptr) return;
  result->transcript.push_back({p, q, a});
  ++result->questions_asked;
}

Answer Ask(const KnowledgeWorld& kw, PersonId p, const Question& q,
           Adversary& adversary, StrategyResult* result) {
  Answer a = SpokenAnswer(kw, p, q, adversary);
  Record(result, p, q, a);
  return a;
}

// Whether the answer marks the subject as guilty, where truth-tellers mean
// it by `guilty_answer` and liars by its opposite.
bool Accuses(Island island, const Answer& a, Answer::Kind guilty_answer) {
  const Answer::Kind liar_answer = guilty_answer == Answer::Kind::kYes
                                       ? Answer::Kind::kNo
                                       : Answer::Kind::kYes;
  return a.kind ==
         (island == Island::kTruthTellers ? guilty_answer : liar_answer);
}

std::vector<Island> KnownIslands(const KnowledgeWorld& kw,
                                 Adversary& adversary,
                                 StrategyResult* result) {
  if (auto island = kw.CommonIsland()) {
    return std::vector<Island>(kw.size(), *island);
  }
  return ClassifyIslands(kw, adversary, result);
}

void RequireIgnorance(const KnowledgeWorld& kw, std::string_view strategy) {
  if (!kw.AllIgnorant()) {
    throw PreconditionError(std::string(strategy) +
                            ": requires that nobody knows about anybody else");
  }
}

void RequireIsland(const KnowledgeWorld& kw, Island island,
                   std::string_view strategy) {
  if (kw.CommonIsland() != island) {
    throw PreconditionError(std::string(strategy) + ": requires everyone from " +
                            std::string(IslandName(island)) + " island");
  }
}

void SortAccused(StrategyResult& r) {
  std::sort(r.accused.begin(), r.accused.end());
  r.accused.erase(std::unique(r.accused.begin(), r.accused.end()),
                  r.accused.end());
}

}  // namespace

// {{{ KnowledgeWorld

KnowledgeWorld::KnowledgeWorld(std::vector<SpeakerType> types,
                               std::vector<bool> guilty,
                               std::vector<std::vector<Knowledge>> knowledge,
                               std::optional<int> count_public,
                               std::optional<std::string> secret)
    : types_(std::move(types)),
      guilty_(std::move(guilty)),
      knowledge_(std::move(knowledge)),
      count_public_(count_public),
      secret_(std::move(secret)) {
  const std::size_t n = types_.size();
  if (n == 0) throw ConfigError("knowledge world has no persons");
  if (n > 64) throw ConfigError("knowledge world has more than 64 persons");
  if (guilty_.size() != n || knowledge_.size() != n) {
    throw ConfigError("knowledge world tables do not match person count");
  }
  if (GuiltyCount() == 0) throw ConfigError("guilt set must be non-empty");
  for (std::size_t p = 0; p < n; ++p) {
    if (knowledge_[p].size() != n) {
      throw ConfigError("knowledge row has the wrong length");
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const Knowledge k = knowledge_[p][q];
      if ((k == Knowledge::kKnowsGuilty && !guilty_[q]) ||
          (k == Knowledge::kKnowsInnocent && guilty_[q])) {
        throw ConfigError("knowledge of person " + std::to_string(p) +
                          " about " + std::to_string(q) + " is not factive");
      }
    }
  }
  if (count_public_ && *count_public_ != GuiltyCount()) {
    throw ConfigError("public count differs from the number of criminals");
  }
  if (secret_ && secret_->empty()) throw ConfigError("empty secret");
}

KnowledgeWorld KnowledgeWorld::Ignorant(std::vector<SpeakerType> types,
                                        std::vector<bool> guilty,
                                        std::optional<int> count_public,
                                        std::optional<std::string> secret) {
  const std::size_t n = types.size();
  return KnowledgeWorld(
      std::move(types), std::move(guilty),
      std::vector<std::vector<Knowledge>>(
          n, std::vector<Knowledge>(n, Knowledge::kUnknown)),
      count_public, std::move(secret));
}

Knowledge KnowledgeWorld::knowledge(PersonId p, PersonId q) const {
  if (p == q) {
    return guilty_[p] ? Knowledge::kKnowsGuilty : Knowledge::kKnowsInnocent;
  }
  return knowledge_[p][q];
}

std::vector<PersonId> KnowledgeWorld::GuiltySet() const {
  std::vector<PersonId> out;
  for (PersonId p = 0; p < size(); ++p) {
    if (guilty_[p]) out.push_back(p);
  }
  return out;
}

int KnowledgeWorld::GuiltyCount() const {
  return static_cast<int>(std::count(guilty_.begin(), guilty_.end(), true));
}

bool KnowledgeWorld::AllIgnorant() const {
  for (PersonId p = 0; p < size(); ++p) {
    for (PersonId q = 0; q < size(); ++q) {
      if (p != q && knowledge_[p][q] != Knowledge::kUnknown) return false;
    }
  }
  return true;
}

std::optional<Island> KnowledgeWorld::CommonIsland() const {
  const Island first = island(0);
  for (PersonId p = 1; p < size(); ++p) {
    if (island(p) != first) return std::nullopt;
  }
  return first;
}

// }}}

// {{{ Questions and answers

Question Question::KnownFact(bool value) {
  return {.kind = Kind::kKnownFact, .fact = value};
}
Question Question::DirectGuilt() { return {.kind = Kind::kDirectGuilt}; }
Question Question::PossibleSubset(std::vector<PersonId> people) {
  std::sort(people.begin(), people.end());
  return {.kind = Kind::kPossibleSubset, .people = std::move(people)};
}
Question Question::PossibleExact(std::vector<PersonId> people) {
  std::sort(people.begin(), people.end());
  return {.kind = Kind::kPossibleExact, .people = std::move(people)};
}
Question Question::PossibleSizeExcludingSelf(int m) {
  return {.kind = Kind::kPossibleSizeExcludingSelf, .m = m};
}
Question Question::PossibleInnocent(PersonId q) {
  return {.kind = Kind::kPossibleInnocent, .target = q};
}
Question Question::DidDetectiveDoIt() {
  return {.kind = Kind::kDidDetectiveDoIt};
}
Question Question::DetectivePossible() {
  return {.kind = Kind::kDetectivePossible};
}
Question Question::SecretAttribute() {
  return {.kind = Kind::kSecretAttribute};
}

std::string ToString(const Question& q) {
  auto list = [](const std::vector<PersonId>& people) {
    std::string s = "{";
    for (std::size_t i = 0; i < people.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(people[i]);
    }
    return s + "}";
  };
  switch (q.kind) {
    case Question::Kind::kKnownFact:
      return std::string("known_fact(") + (q.fact ? "true" : "false") + ")";
    case Question::Kind::kDirectGuilt:
      return "direct_guilt";
    case Question::Kind::kPossibleSubset:
      return "possible_subset(" + list(q.people) + ")";
    case Question::Kind::kPossibleExact:
      return "possible_exact(" + list(q.people) + ")";
    case Question::Kind::kPossibleSizeExcludingSelf:
      return "possible_size_excluding_self(" + std::to_string(q.m) + ")";
    case Question::Kind::kPossibleInnocent:
      return "possible_innocent(" + std::to_string(q.target) + ")";
    case Question::Kind::kDidDetectiveDoIt:
      return "did_detective_do_it";
    case Question::Kind::kDetectivePossible:
      return "detective_possible";
    case Question::Kind::kSecretAttribute:
      return "secret_attribute";
  }
  return "?";
}

std::string ToString(const Answer& a) {
  switch (a.kind) {
    case Answer::Kind::kYes:
      return "yes";
    case Answer::Kind::kNo:
      return "no";
    case Answer::Kind::kUnknown:
      return "unknown";
    case Answer::Kind::kToken:
      return "token:" + a.token;
  }
  return "?";
}

Answer TruthfulAnswer(const KnowledgeWorld& kw, PersonId p, const Question& q) {
  if (p < 0 || p >= kw.size()) {
    throw ConfigError("unknown person " + std::to_string(p));
  }
  const Belief b = BeliefOf(kw, p);
  const Mask all = Everyone(kw.size());
  switch (q.kind) {
    case Question::Kind::kKnownFact:
      return Answer::FromBool(q.fact);
    case Question::Kind::kDirectGuilt:
      return Answer::FromBool(kw.guilty(p));
    case Question::Kind::kPossibleSubset:
      return Answer::FromBool(Exists(b, ToMask(q.people)));
    case Question::Kind::kPossibleExact: {
      const Mask l = ToMask(q.people);
      const bool ok = l != 0 && (b.in & ~l) == 0 && (b.out & l) == 0 &&
                      (!b.count || *b.count == std::popcount(l));
      return Answer::FromBool(ok);
    }
    case Question::Kind::kPossibleSizeExcludingSelf: {
      if (b.count && *b.count != q.m) return Answer::No();
      Belief sized = b;
      sized.count = q.m;
      return Answer::FromBool(Exists(sized, all & ~Bit(p)));
    }
    case Question::Kind::kPossibleInnocent:
      if (q.target < 0 || q.target >= kw.size()) {
        throw ConfigError("unknown person " + std::to_string(q.target));
      }
      return Answer::FromBool(Exists(b, all & ~Bit(q.target)));
    case Question::Kind::kDidDetectiveDoIt:
    case Question::Kind::kDetectivePossible: {
      const bool rules_out = (kw.guilty(p) && kw.GuiltyCount() == 1) ||
                             KnowsWholeSet(b);
      if (q.kind == Question::Kind::kDetectivePossible) {
        return Answer::FromBool(!rules_out);
      }
      return rules_out ? Answer::No() : Answer::Unknown();
    }
    case Question::Kind::kSecretAttribute:
      if (!kw.secret()) {
        throw ConfigError("secret attribute asked but no secret is configured");
      }
      return kw.guilty(p) ? Answer::Token(*kw.secret()) : Answer::Unknown();
  }
  return Answer::Unknown();
}

Answer SpokenAnswer(const KnowledgeWorld& kw, PersonId p, const Question& q,
                    Adversary& adversary) {
  const Answer truthful = TruthfulAnswer(kw, p, q);
  const bool direct = q.kind == Question::Kind::kDirectGuilt;
  switch (kw.type(p)) {
    case SpeakerType::kAbsoluteTruthTeller:
      return truthful;
    case SpeakerType::kPartialTruthTeller:
      if (direct && LiesWhenAskedGuilt(kw.type(p), kw.guilty(p))) {
        return Answer::No();
      }
      return truthful;
    case SpeakerType::kAbsoluteLiar:
      return Flip(truthful, q, kw, adversary);
    case SpeakerType::kResponsibleLiar:
      if (direct) return Answer::Yes();
      return Flip(truthful, q, kw, adversary);
  }
  return truthful;
}

// }}}

// {{{ Strategies

std::vector<Island> ClassifyIslands(const KnowledgeWorld& kw,
                                    Adversary& adversary,
                                    StrategyResult* result) {
  std::vector<Island> islands;
  const Question q = Question::KnownFact(true);
  for (PersonId p = 0; p < kw.size(); ++p) {
    const Answer a = Ask(kw, p, q, adversary, result);
    islands.push_back(a.kind == Answer::Kind::kYes ? Island::kTruthTellers
                                                   : Island::kLiars);
  }
  return islands;
}

StrategyResult AskAllAboutOthers(const KnowledgeWorld& kw,
                                 Adversary& adversary) {
  StrategyResult r;
  const std::vector<Island> islands = KnownIslands(kw, adversary, &r);
  for (PersonId p = 0; p < kw.size(); ++p) {
    for (PersonId q = 0; q < kw.size(); ++q) {
      if (p == q) continue;
      const Answer a =
          Ask(kw, p, Question::PossibleInnocent(q), adversary, &r);
      if (Accuses(islands[p], a, Answer::Kind::kNo)) r.accused.push_back(q);
    }
  }
  SortAccused(r);
  return r;
}

StrategyResult CountKnown(const KnowledgeWorld& kw, Adversary& adversary) {
  if (!kw.count_public()) {
    throw PreconditionError("count_known: the number of criminals must be public");
  }
  RequireIgnorance(kw, "count_known");
  StrategyResult r;
  const std::vector<Island> islands = KnownIslands(kw, adversary, &r);
  const Question q = Question::PossibleSizeExcludingSelf(*kw.count_public());
  for (PersonId p = 0; p < kw.size(); ++p) {
    if (Accuses(islands[p], Ask(kw, p, q, adversary, &r), Answer::Kind::kNo)) {
      r.accused.push_back(p);
    }
  }
  return r;
}

StrategyResult CountUnknown(const KnowledgeWorld& kw, Adversary& adversary) {
  if (kw.count_public()) {
    throw PreconditionError(
        "count_unknown: the number of criminals must not be public");
  }
  RequireIgnorance(kw, "count_unknown");
  StrategyResult r;
  const std::vector<Island> islands = KnownIslands(kw, adversary, &r);
  std::vector<PersonId> everyone(kw.size());
  for (PersonId p = 0; p < kw.size(); ++p) everyone[p] = p;
  const Question q = Question::PossibleExact(everyone);
  for (PersonId p = 0; p < kw.size(); ++p) {
    if (Accuses(islands[p], Ask(kw, p, q, adversary, &r),
                Answer::Kind::kYes)) {
      r.accused.push_back(p);
    }
  }
  return r;
}

StrategyResult SolveTruthTellers(const KnowledgeWorld& kw,
                                 Adversary& adversary) {
  RequireIsland(kw, Island::kTruthTellers, "solve_truthtellers");
  StrategyResult r = AskAllAboutOthers(kw, adversary);
  const Mask identified = ToMask(r.accused);
  for (PersonId p = 0; p < kw.size(); ++p) {
    if (identified & Bit(p)) continue;
    const Mask list = identified | (Everyone(kw.size()) & ~Bit(p));
    const Answer a =
        Ask(kw, p, Question::PossibleSubset(FromMask(list)), adversary, &r);
    if (a.kind == Answer::Kind::kNo) r.accused.push_back(p);
  }
  SortAccused(r);
  return r;
}

StrategyResult SolveLiars(const KnowledgeWorld& kw, Adversary& adversary,
                          LiarsMode mode, std::mt19937_64* list_source) {
  RequireIsland(kw, Island::kLiars, "solve_liars");
  std::mt19937_64 fallback(adversary());
  std::mt19937_64& lists = list_source ? *list_source : fallback;
  StrategyResult r;
  const int n = kw.size();
  for (PersonId p = 0; p < n; ++p) {
    Question q;
    if (mode == LiarsMode::kRobust) {
      q = Question::PossibleSubset(FromMask(Everyone(n) & ~Bit(p)));
    } else {
      std::vector<PersonId> others;
      for (PersonId o = 0; o < n; ++o) {
        if (o != p) others.push_back(o);
      }
      internal::Shuffle(others, lists);
      std::size_t size = 0;
      if (!others.empty()) {
        const auto& count = kw.count_public();
        size = count && *count <= n - 1
                   ? static_cast<std::size_t>(*count)
                   : internal::UniformInt(lists, 1, others.size());
      }
      others.resize(size);
      q = Question::PossibleExact(std::move(others));
    }
    if (Ask(kw, p, q, adversary, &r).kind == Answer::Kind::kYes) {
      r.accused.push_back(p);
    }
  }
  return r;
}

StrategyResult SolveMixed(const KnowledgeWorld& kw, Adversary& adversary) {
  StrategyResult r;
  const std::vector<Island> islands = ClassifyIslands(kw, adversary, &r);
  const int n = kw.size();
  for (PersonId p = 0; p < n; ++p) {
    const Question q =
        Question::PossibleSubset(FromMask(Everyone(n) & ~Bit(p)));
    if (Accuses(islands[p], Ask(kw, p, q, adversary, &r), Answer::Kind::kNo)) {
      r.accused.push_back(p);
    }
  }
  return r;
}

PersonId SolveLoneCriminal(const KnowledgeWorld& kw, Adversary& adversary,
                           StrategyResult* result) {
  if (kw.GuiltyCount() != 1) {
    throw PreconditionError("neil: requires exactly one criminal");
  }
  RequireIgnorance(kw, "neil");
  const auto island = kw.CommonIsland();
  if (!island) {
    throw PreconditionError("neil: requires everyone from the same island");
  }
  StrategyResult local;
  StrategyResult& r = result ? *result : local;
  const bool truth = *island == Island::kTruthTellers;
  const Question q =
      truth ? Question::DidDetectiveDoIt() : Question::DetectivePossible();
  const Answer::Kind tell = truth ? Answer::Kind::kNo : Answer::Kind::kYes;
  std::vector<PersonId> marked;
  for (PersonId p = 0; p < kw.size(); ++p) {
    if (Ask(kw, p, q, adversary, &r).kind == tell) marked.push_back(p);
  }
  if (marked.size() != 1) {
    throw PreconditionError("neil: answers do not single out one person");
  }
  r.accused = marked;
  return marked.front();
}

StrategyResult SolveBySecret(const KnowledgeWorld& kw, Adversary& adversary) {
  if (!kw.secret()) {
    throw PreconditionError("secret_attribute: no secret is configured");
  }
  if (kw.CommonIsland() != Island::kTruthTellers) {
    throw PreconditionError(
        "secret_attribute: open-ended answers are unreliable off the "
        "truth-tellers' island");
  }
  StrategyResult r;
  for (PersonId p = 0; p < kw.size(); ++p) {
    const Answer a = Ask(kw, p, Question::SecretAttribute(), adversary, &r);
    if (a.kind == Answer::Kind::kToken && a.token == *kw.secret()) {
      r.accused.push_back(p);
    }
  }
  return r;
}

// }}}

KnowledgeWorld GenerateKnowledgeWorld(const WorldConfig& config) {
  if (config.n < 1 || config.n > 64) {
    throw ConfigError("n must be between 1 and 64");
  }
  if (config.min_criminals < 1 || config.max_criminals > config.n ||
      config.min_criminals > config.max_criminals) {
    throw ConfigError("criminal count range " +
                      std::to_string(config.min_criminals) + "-" +
                      std::to_string(config.max_criminals) +
                      " is infeasible for " + std::to_string(config.n) +
                      " persons");
  }
  if (!(config.knowledge_density >= 0.0 && config.knowledge_density <= 1.0)) {
    throw ConfigError("knowledge density must lie in [0, 1]");
  }
  std::mt19937_64 rng(internal::SplitMix64(config.seed));
  const int n = config.n;

  std::vector<SpeakerType> types(n);
  for (SpeakerType& t : types) {
    switch (config.island) {
      case IslandMode::kTruthTellers:
        t = internal::UniformInt(rng, 0, 1) == 0
                ? SpeakerType::kAbsoluteTruthTeller
                : SpeakerType::kPartialTruthTeller;
        break;
      case IslandMode::kLiars:
        t = internal::UniformInt(rng, 0, 1) == 0
                ? SpeakerType::kAbsoluteLiar
                : SpeakerType::kResponsibleLiar;
        break;
      case IslandMode::kMixed:
        t = kAllSpeakerTypes[internal::UniformInt(rng, 0, 3)];
        break;
    }
  }

  const int k = static_cast<int>(internal::UniformInt(
      rng, config.min_criminals, config.max_criminals));
  std::vector<PersonId> order(n);
  for (PersonId p = 0; p < n; ++p) order[p] = p;
  internal::Shuffle(order, rng);
  std::vector<bool> guilty(n, false);
  for (int i = 0; i < k; ++i) guilty[order[i]] = true;

  std::vector<std::vector<Knowledge>> knowledge(
      n, std::vector<Knowledge>(n, Knowledge::kUnknown));
  for (PersonId p = 0; p < n; ++p) {
    for (PersonId q = 0; q < n; ++q) {
      if (p == q) continue;
      if (internal::Bernoulli(rng, config.knowledge_density)) {
        knowledge[p][q] =
            guilty[q] ? Knowledge::kKnowsGuilty : Knowledge::kKnowsInnocent;
      }
    }
  }

  std::optional<std::string> secret;
  if (config.secret) {
    secret = std::string(kColors[internal::UniformInt(rng, 0, kColors.size() - 1)]);
  }
  return KnowledgeWorld(std::move(types), std::move(guilty),
                        std::move(knowledge),
                        config.count_public ? std::optional<int>(k)
                                            : std::nullopt,
                        std::move(secret));
}

}  // namespace islanders
