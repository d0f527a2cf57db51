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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "islanders/dsl.h"
#include "test_support.h"

namespace islanders {
namespace {

using testing::CorpusNames;
using testing::FindBodyTokens;
using testing::ReplaceToken;
using testing::TokenAt;
using testing::ReadCorpusFile;

constexpr SpeakerType AT = SpeakerType::kAbsoluteTruthTeller;
constexpr SpeakerType PT = SpeakerType::kPartialTruthTeller;

ParseError ExpectParseError(const std::string& text) {
  try {
    ParsePuzzle(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError({}, "");
}

TEST(DslTest, MinimalPuzzle) {
  const Puzzle p = ParsePuzzle("puzzle p { suspects A; }");
  EXPECT_EQ(p.name, "p");
  EXPECT_EQ(p.suspects, std::vector<std::string>{"A"});
  EXPECT_EQ(p.type_domains, std::vector<TypeSet>{TypeSet::All()});
  EXPECT_EQ(p.criminals, CountConstraint{});
}

TEST(DslTest, FullSyntax) {
  const Puzzle p = ParsePuzzle(R"(
    # comment
    puzzle full {
      suspects A, B, C;
      island truthtellers;
      types C: {AT};
      criminals in {1, 2};
      typecount exactly 1 {PT};
      statement a A: not guilty(A) and (guilty(B) or type(C) = AT);
      statement b B: truthful(a) -> island(A) = liars <-> count <= 2;
      statement c C: unmodeled "She said \"hi\"";
      statement d C: lies_about_guilt(A) or knows_whodunit(B) or free("x");
      axiom forall X: guilty(X) -> not type(X) = PT;
    })");
  EXPECT_EQ(p.type_domains[0], TypeSet::Of(Island::kTruthTellers));
  EXPECT_EQ(p.type_domains[2], TypeSet{AT});
  EXPECT_EQ(p.criminals.allowed, (std::vector<int>{1, 2}));
  ASSERT_EQ(p.type_cardinality.exact.size(), 1u);
  EXPECT_EQ(p.type_cardinality.exact[0].types, TypeSet{PT});
  ASSERT_EQ(p.statements.size(), 4u);
  EXPECT_FALSE(p.statements[2].modeled());
  EXPECT_EQ(p.statements[2].unmodeled_text, "She said \"hi\"");
  EXPECT_EQ(p.axioms.size(), 3u);  // one per suspect
  EXPECT_EQ(p.axioms[1], Formula::Implies(Formula::Guilty(1),
                                          Formula::Not(Formula::HasType(1, PT))));
  // "->" binds looser than "and"/"or" and tighter than "<->".
  EXPECT_EQ(p.statements[1].body->kind(), Formula::Kind::kIff);
  EXPECT_EQ(p.statements[1].body->lhs().kind(), Formula::Kind::kImplies);
}

TEST(DslTest, ImpliesIsRightAssociative) {
  const Puzzle p = ParsePuzzle(
      "puzzle p { suspects A; statement s A: true -> false -> true; }");
  const Formula& f = *p.statements[0].body;
  EXPECT_EQ(f, Formula::Implies(Formula::True(),
                                Formula::Implies(Formula::False(),
                                                 Formula::True())));
}

TEST(DslTest, NestedForall) {
  const Puzzle p = ParsePuzzle(
      "puzzle p { suspects A, B; "
      "axiom forall X: forall Y: guilty(X) <-> guilty(Y); }");
  EXPECT_EQ(p.axioms.size(), 4u);
}

TEST(DslTest, RoundTripCorpus) {
  for (const std::string& name : CorpusNames()) {
    const Puzzle p = ParsePuzzle(ReadCorpusFile(name + ".puz"));
    const std::string text = SerializePuzzle(p);
    EXPECT_EQ(ParsePuzzle(text), p) << name << "\n" << text;
    EXPECT_EQ(SerializePuzzle(ParsePuzzle(text)), text) << name;
  }
}

TEST(DslTest, RoundTripRandomPuzzles) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const Puzzle p = testing::RandomPuzzle(rng, 4);
    const std::string text = SerializePuzzle(p);
    ASSERT_EQ(ParsePuzzle(text), p) << text;
  }
}

TEST(DslErrorTest, UnknownSuspect) {
  const ParseError e = ExpectParseError(
      "puzzle p {\n  suspects A;\n  statement s A: guilty(Bob);\n}");
  EXPECT_EQ(e.span(), (SourceSpan{3, 25, 3}));
  EXPECT_NE(e.message().find("Bob"), std::string::npos);
  EXPECT_EQ(std::string(e.what()).rfind("3:25: ", 0), 0u) << e.what();
}

TEST(DslErrorTest, UnknownAtomListsKeywords) {
  const ParseError e =
      ExpectParseError("puzzle p { suspects A; statement s A: guilt(A); }");
  EXPECT_EQ(e.span().column, 39);
  EXPECT_FALSE(e.expected().empty());
}

TEST(DslErrorTest, TruthfulReferences) {
  EXPECT_NE(ExpectParseError("puzzle p { suspects A; statement s A: "
                             "truthful(zz); }")
                .message()
                .find("zz"),
            std::string::npos);
  // Self-reference and forward references are cycles in waiting.
  const ParseError self = ExpectParseError(
      "puzzle p { suspects A; statement s A: truthful(s); }");
  EXPECT_NE(self.message().find("cyclic"), std::string::npos);
  EXPECT_EQ(self.span().column, 48);
  const ParseError unmodeled = ExpectParseError(
      "puzzle p { suspects A; statement u A: unmodeled \"x\"; "
      "statement s A: truthful(u); }");
  EXPECT_NE(unmodeled.message().find("unmodeled"), std::string::npos);
}

TEST(DslErrorTest, LexicalErrors) {
  EXPECT_EQ(ExpectParseError("puzzle p { suspects A; statement s A: "
                             "free(\"abc); }")
                .span()
                .column,
            44);
  EXPECT_EQ(ExpectParseError("puzzle p { suspects A; @ }").span().column, 24);
  ExpectParseError("puzzle p { suspects A; criminals = 99999999999; }");
  ExpectParseError("puzzle p { suspects A; statement s A: free(\"\xff\"); }");
}

TEST(DslErrorTest, InvariantViolations) {
  ExpectParseError("puzzle p { suspects A, A; }");
  ExpectParseError("puzzle p { suspects A; statement s A: true; "
                   "statement s A: true; }");
  ExpectParseError("puzzle p { suspects A; types A: {}; }");
  ExpectParseError("puzzle p { suspects A; }  trailing");
  ExpectParseError("");
}

TEST(DslErrorTest, DepthLimit) {
  std::string deep = "puzzle p { suspects A; statement s A: ";
  for (int i = 0; i < 5000; ++i) deep += "(";
  deep += "true";
  for (int i = 0; i < 5000; ++i) deep += ")";
  deep += "; }";
  ExpectParseError(deep);
  std::string nots = "puzzle p { suspects A; statement s A: ";
  for (int i = 0; i < 5000; ++i) nots += "not ";
  nots += "true; }";
  ExpectParseError(nots);
}

TEST(DslMutationTest, ErrorSpanLandsOnMutatedToken) {
  int mutations = 0;
  for (const std::string& name : CorpusNames()) {
    const std::string text = ReadCorpusFile(name + ".puz");
    const Puzzle p = ParsePuzzle(text);
    std::string names;
    for (const std::string& s : p.suspects) names += (names.empty() ? "" : "|") + s;
    const std::string person = "\\b(" + names + ")\\b";
    const std::string keyword = "\\b(guilty|and|or|type|island|count)\\b";
    for (const std::string* pattern : {&person, &keyword}) {
      for (const TokenAt& at : FindBodyTokens(text, *pattern)) {
        const std::string replacement =
            pattern == &person ? "Zzz" : "z" + at.text + "z";
        const std::string mutated = ReplaceToken(text, at, replacement);
        try {
          ParsePuzzle(mutated);
          ADD_FAILURE() << name << ": mutation at " << at.line << ":"
                        << at.column << " parsed";
        } catch (const ParseError& e) {
          EXPECT_EQ(e.span().line, at.line) << name << " " << e.what();
          EXPECT_EQ(e.span().column, at.column) << name << " " << e.what();
          EXPECT_EQ(e.span().length, static_cast<int>(replacement.size()))
              << name << " " << e.what();
        }
        ++mutations;
      }
    }
  }
  EXPECT_GT(mutations, 100);
}

TEST(DslFuzzTest, ParserIsTotal) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vocab = {
      "puzzle", "p",        "{",      "}",     "suspects", "A",    "B",
      ",",      ";",        ":",      "(",     ")",        "statement",
      "s",      "guilty",   "and",    "or",    "not",      "->",   "<->",
      "=",      "<=",       ">=",     "AT",    "type",     "island",
      "liars",  "count",    "2",      "axiom", "forall",   "X",    "\"q\"",
      "free",   "truthful", "criminals", "typecount", "in", "unmodeled",
      "one_of_each", "exactly", "at_most_distinct", "types"};
  auto run = [](const std::string& text) {
    try {
      ParsePuzzle(text);
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << "non-parse exception " << e.what() << " for: " << text;
    }
  };
  for (int i = 0; i < 3000; ++i) {
    std::string soup = "puzzle p { suspects A, B; ";
    const int len = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int j = 0; j < len; ++j) {
      soup += vocab[std::uniform_int_distribution<std::size_t>(
          0, vocab.size() - 1)(rng)];
      soup += " ";
    }
    run(soup);
    std::string bytes;
    for (int j = 0; j < len * 2; ++j) {
      bytes += static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
    }
    run(bytes);
  }
  for (const std::string& name : CorpusNames()) {
    const std::string text = ReadCorpusFile(name + ".puz");
    for (std::size_t cut = 0; cut < text.size(); cut += 3) {
      run(text.substr(0, cut));
    }
  }
}

}  // namespace
}  // namespace islanders
