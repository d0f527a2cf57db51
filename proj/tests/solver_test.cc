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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "islanders/dsl.h"
#include "islanders/errors.h"
#include "islanders/solver.h"
#include "test_support.h"

namespace islanders {
namespace {

using testing::LoadCorpusPuzzle;
using testing::SortedNames;
using Names = std::vector<std::string>;

constexpr SpeakerType AT = SpeakerType::kAbsoluteTruthTeller;
constexpr SpeakerType PT = SpeakerType::kPartialTruthTeller;
constexpr SpeakerType AL = SpeakerType::kAbsoluteLiar;
constexpr SpeakerType RL = SpeakerType::kResponsibleLiar;

std::map<std::string, SpeakerType> ForcedTypes(const Puzzle& p,
                                               const SolveReport& r) {
  std::map<std::string, SpeakerType> out;
  for (const auto& [id, t] : r.forced_types) out[p.suspects[id]] = t;
  return out;
}

TEST(SolveCorpusTest, Ashwin) {
  const Puzzle p = LoadCorpusPuzzle("ashwin");
  const SolveReport r = Solve(p);
  EXPECT_EQ(SortedNames(p, r.forced_guilty), (Names{"Andrew", "Jacob", "Leon"}));
  EXPECT_EQ(SortedNames(p, r.forced_innocent), (Names{"Ezra", "Will"}));
  EXPECT_EQ(ForcedTypes(p, r),
            (std::map<std::string, SpeakerType>{
                {"Leon", AT}, {"Andrew", AT}, {"Jacob", PT}}));
  EXPECT_EQ(SortedNames(p, r.unresolved), (Names{"Ezra", "Will"}));
  EXPECT_EQ(r.verdict, Verdict::kUniqueGuilt);
}

TEST(SolveCorpusTest, Jacob) {
  const Puzzle p = LoadCorpusPuzzle("jacob");
  EXPECT_EQ(SortedNames(p, Solve(p).forced_guilty), (Names{"Ashwin", "Ezra"}));
}

TEST(SolveCorpusTest, Andrew) {
  const Puzzle p = LoadCorpusPuzzle("andrew");
  EXPECT_EQ(SortedNames(p, Solve(p).forced_guilty),
            (Names{"Essra", "Johnatan"}));
}

TEST(SolveCorpusTest, Jonathan) {
  const Puzzle p = LoadCorpusPuzzle("jonathan");
  for (const World& w : ConsistentWorlds(p)) {
    EXPECT_EQ(w.GuiltySet(), std::vector<PersonId>{0});
  }
  EXPECT_EQ(SortedNames(p, Solve(p).forced_guilty), Names{"Mike"});
}

TEST(SolveCorpusTest, Ben) {
  const Puzzle p = LoadCorpusPuzzle("ben");
  const SolveReport r = Solve(p);
  EXPECT_EQ(SortedNames(p, r.forced_guilty), (Names{"Leon", "Neil"}));
  EXPECT_EQ(ForcedTypes(p, r),
            (std::map<std::string, SpeakerType>{
                {"Leon", AT}, {"Mike", PT}, {"Neil", AL}, {"Nastia", RL}}));
}

TEST(SolveCorpusTest, Mike) {
  const Puzzle p = LoadCorpusPuzzle("mike");
  EXPECT_EQ(SortedNames(p, Solve(p).forced_guilty), Names{"Jonathan"});
}

TEST(SolveCorpusTest, Nastia) {
  const Puzzle p = LoadCorpusPuzzle("nastia");
  const SolveReport r = Solve(p);
  EXPECT_EQ(SortedNames(p, r.forced_guilty), Names{"Leon"});
  ASSERT_TRUE(r.forced_type_set.has_value());
  EXPECT_EQ(*r.forced_type_set, (TypeSet{AT, RL}));
}

TEST(SolveCorpusTest, Will) {
  const Puzzle p = LoadCorpusPuzzle("will");
  const SolveReport r = Solve(p);
  EXPECT_EQ(SortedNames(p, r.forced_guilty), (Names{"Andrew", "Jacob"}));
  EXPECT_EQ(ForcedTypes(p, r),
            (std::map<std::string, SpeakerType>{
                {"Ezra", RL}, {"Jacob", PT}, {"Andrew", RL}}));
}

TEST(SolveCorpusTest, EzraOnLiarsIslandIsInconsistent) {
  const Puzzle p = LoadCorpusPuzzle("ezra_liars");
  const SolveReport r = Solve(p);
  EXPECT_EQ(r.verdict, Verdict::kInconsistent);
  EXPECT_EQ(r.consistent_world_count, 0u);
  EXPECT_TRUE(r.forced_guilty.empty());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("neil2"), std::string::npos);
}

TEST(EzraOracleTest, NoLiarsIslandAssignmentSurvives) {
  int candidates = 0;
  EXPECT_EQ(testing::EzraLiarsIslandSurvivors(&candidates), 0);
  EXPECT_EQ(candidates, 64);
  EXPECT_TRUE(ConsistentWorlds(LoadCorpusPuzzle("ezra_liars")).empty());
}

TEST(SolveTest, SingleSelfAccusingTruthTeller) {
  const Puzzle p = ParsePuzzle(R"(puzzle one {
    suspects A; types A: {AT}; criminals = 1;
    statement a A: guilty(A);
  })");
  const std::vector<World> worlds = ConsistentWorlds(p);
  ASSERT_EQ(worlds.size(), 1u);
  EXPECT_EQ(worlds[0].types, std::vector<SpeakerType>{AT});
  EXPECT_EQ(worlds[0].guilty, 1u);
  EXPECT_EQ(Solve(p).verdict, Verdict::kUniqueWorld);
}

TEST(SolveTest, MultipleVerdict) {
  const Puzzle p = ParsePuzzle(R"(puzzle two {
    suspects A, B; island truthtellers; criminals = 1;
  })");
  const SolveReport r = Solve(p);
  EXPECT_EQ(r.verdict, Verdict::kMultiple);
  EXPECT_EQ(r.unresolved, (std::vector<PersonId>{0, 1}));
  EXPECT_EQ(r.consistent_world_count, 8u);
}

TEST(SolveTest, EnumerationOrder) {
  const Puzzle p = ParsePuzzle(R"(puzzle order {
    suspects A, B; types A: {AT, AL}; types B: {PT, RL}; criminals >= 1;
  })");
  std::vector<World> seen;
  EnumerateWorlds(p, [&](const World& w) {
    seen.push_back(w);
    return true;
  });
  ASSERT_EQ(seen.size(), 12u);
  EXPECT_EQ(seen[0].types, (std::vector<SpeakerType>{AT, PT}));
  EXPECT_EQ(seen[0].guilty, 1u);
  EXPECT_EQ(seen[1].guilty, 2u);
  EXPECT_EQ(seen[2].guilty, 3u);
  EXPECT_EQ(seen[3].types, (std::vector<SpeakerType>{AT, RL}));
  EXPECT_EQ(seen[6].types, (std::vector<SpeakerType>{AL, PT}));
}

TEST(SolveTest, EarlyStop) {
  const Puzzle p = LoadCorpusPuzzle("ashwin");
  int calls = 0;
  EnumerateWorlds(p, [&](const World&) { return ++calls < 2; });
  EXPECT_EQ(calls, 2);
}

TEST(SolveTest, SearchCeiling) {
  const Puzzle p = LoadCorpusPuzzle("ashwin");
  // 2^5 types * 2^5 guilt sets.
  EXPECT_EQ(CandidateCount(p), 1024u);
  SolverOptions tight;
  tight.max_candidates = 1000;
  EXPECT_THROW(Solve(p, tight), SearchSpaceError);
  Puzzle big;
  big.name = "big";
  for (int i = 0; i < 20; ++i) big.suspects.push_back("P" + std::to_string(i));
  big.type_domains.assign(20, TypeSet::All());
  EXPECT_THROW(ConsistentWorlds(big), SearchSpaceError);
  try {
    ConsistentWorlds(big);
  } catch (const SearchSpaceError& e) {
    EXPECT_NE(std::string(e.what()).find("candidate worlds"), std::string::npos)
        << e.what();
  }
}

TEST(CheckWorldTest, JonathanDiagnostics) {
  const Puzzle p = LoadCorpusPuzzle("jonathan");
  const std::vector<World> worlds = ConsistentWorlds(p);
  ASSERT_FALSE(worlds.empty());
  World w = worlds.front();
  EXPECT_TRUE(CheckWorld(p, w).ok);
  w.SetGuilty(1, true);  // Mike and Leon
  const WorldCheck c = CheckWorld(p, w);
  EXPECT_FALSE(c.ok);
  const bool names_ashwin =
      std::any_of(c.violations.begin(), c.violations.end(),
                  [](const std::string& v) {
                    return v.rfind("statement ashwin1 (Ashwin", 0) == 0;
                  });
  EXPECT_TRUE(names_ashwin) << ::testing::PrintToString(c.violations);
}

TEST(CheckWorldTest, EmptyGuiltViolatesCount) {
  const Puzzle p = LoadCorpusPuzzle("jonathan");
  World w;
  w.types = {AL, AL, AL};
  const WorldCheck c = CheckWorld(p, w);
  EXPECT_FALSE(c.ok);
  ASSERT_FALSE(c.violations.empty());
  EXPECT_NE(c.violations[0].find("criminal count"), std::string::npos);
}

TEST(CheckWorldTest, ShapeMismatchIsReferenceError) {
  const Puzzle p = LoadCorpusPuzzle("jonathan");
  World w;
  w.types = {AL};
  EXPECT_THROW(CheckWorld(p, w), ReferenceError);
}

TEST(CheckWorldTest, KnowsWhodunitAxiom) {
  const Puzzle p = ParsePuzzle(R"(puzzle k {
    suspects A; criminals = 1;
    statement a A: knows_whodunit(A) or true;
  })");
  World w;
  w.types = {AT};
  w.guilty = 1;
  w.knows_whodunit = {{0, false}};
  const WorldCheck c = CheckWorld(p, w);
  EXPECT_FALSE(c.ok);
  ASSERT_EQ(c.violations.size(), 1u);
  EXPECT_NE(c.violations[0].find("knows_whodunit"), std::string::npos);
  // Innocent persons may go either way.
  const Puzzle q = ParsePuzzle(R"(puzzle k2 {
    suspects A, B; types A: {AT}; types B: {AT}; criminals = 1;
    statement a A: not guilty(A);
    statement b B: knows_whodunit(A) or true;
  })");
  EXPECT_EQ(ConsistentWorlds(q).size(), 2u);
}

TEST(SolveTest, ReportsAreDeterministic) {
  for (const std::string& name : testing::CorpusNames()) {
    const Puzzle p = LoadCorpusPuzzle(name);
    EXPECT_EQ(Solve(p), Solve(p)) << name;
  }
}

TEST(SolveTest, AddingAStatementNeverAddsWorlds) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    Puzzle p = testing::RandomPuzzle(rng, 3);
    std::vector<World> before = ConsistentWorlds(p);
    std::sort(before.begin(), before.end());
    testing::FormulaOptions options;
    options.persons = p.size();
    options.max_depth = 2;
    options.knows_whodunit = false;
    options.free_atoms = p.FreeAtoms();
    Statement s;
    s.label = "extra";
    s.speaker = 0;
    s.body = testing::RandomFormula(rng, options);
    p.statements.push_back(s);
    const std::vector<World> after = ConsistentWorlds(p);
    ASSERT_LE(after.size(), before.size());
    for (const World& w : after) {
      EXPECT_TRUE(std::binary_search(before.begin(), before.end(), w));
    }
  }
}

}  // namespace
}  // namespace islanders
