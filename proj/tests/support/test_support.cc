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

#include "test_support.h"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

#ifndef ISLANDERS_CORPUS_DIR
#error "ISLANDERS_CORPUS_DIR must be defined"
#endif

namespace islanders::testing {

namespace fs = std::filesystem;

namespace {

int Pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

SpeakerType AnyType(std::mt19937_64& rng) {
  return kAllSpeakerTypes[Pick(rng, 0, 3)];
}

}  // namespace

std::string CorpusDir() { return ISLANDERS_CORPUS_DIR; }

std::vector<std::string> CorpusNames() {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(CorpusDir())) {
    if (entry.path().extension() == ".puz") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::string ReadCorpusFile(const std::string& name) {
  const fs::path path = fs::path(CorpusDir()) / name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Puzzle LoadCorpusPuzzle(const std::string& name) {
  return ParsePuzzle(ReadCorpusFile(name + ".puz"));
}

std::vector<std::string> SortedNames(const Puzzle& puzzle,
                                     const std::vector<PersonId>& people) {
  std::vector<std::string> out;
  for (PersonId p : people) out.push_back(puzzle.suspects[p]);
  std::sort(out.begin(), out.end());
  return out;
}

Formula RandomFormula(std::mt19937_64& rng, const FormulaOptions& options) {
  const int n = options.persons;
  if (options.max_depth > 0 && Coin(rng, 0.6)) {
    FormulaOptions sub = options;
    sub.max_depth = options.max_depth - 1;
    switch (Pick(rng, 0, 4)) {
      case 0:
        return Formula::Not(RandomFormula(rng, sub));
      case 1:
        return Formula::And(RandomFormula(rng, sub), RandomFormula(rng, sub));
      case 2:
        return Formula::Or(RandomFormula(rng, sub), RandomFormula(rng, sub));
      case 3:
        return Formula::Implies(RandomFormula(rng, sub),
                                RandomFormula(rng, sub));
      default:
        return Formula::Iff(RandomFormula(rng, sub), RandomFormula(rng, sub));
    }
  }
  for (;;) {
    switch (Pick(rng, 0, 10)) {
      case 0:
        return Formula::Constant(Coin(rng));
      case 1:
      case 2:
      case 3:
        return Formula::Guilty(Pick(rng, 0, n - 1));
      case 4:
        return Formula::HasType(Pick(rng, 0, n - 1), AnyType(rng));
      case 5:
        return Formula::FromIsland(Pick(rng, 0, n - 1),
                                   Coin(rng) ? Island::kTruthTellers
                                             : Island::kLiars);
      case 6:
        return Formula::Count(static_cast<CountOp>(Pick(rng, 0, 2)),
                              Pick(rng, 0, n));
      case 7:
        if (options.labels.empty()) continue;
        return Formula::Truthful(
            options.labels[Pick(rng, 0, options.labels.size() - 1)]);
      case 8:
        return Formula::LiesAboutGuilt(Pick(rng, 0, n - 1));
      case 9:
        if (!options.knows_whodunit) continue;
        return Formula::KnowsWhodunit(Pick(rng, 0, n - 1));
      default:
        if (options.free_atoms.empty()) continue;
        return Formula::Free(
            options.free_atoms[Pick(rng, 0, options.free_atoms.size() - 1)]);
    }
  }
}

Puzzle RandomPuzzle(std::mt19937_64& rng, int max_n) {
  Puzzle p;
  p.name = "random";
  const int n = Pick(rng, 1, max_n);
  for (int i = 0; i < n; ++i) p.suspects.push_back("P" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    switch (Pick(rng, 0, 3)) {
      case 0:
      case 1:
        p.type_domains.push_back(TypeSet::All());
        break;
      case 2:
        p.type_domains.push_back(TypeSet::Of(Coin(rng) ? Island::kTruthTellers
                                                       : Island::kLiars));
        break;
      default:
        p.type_domains.push_back(
            TypeSet::FromMask(static_cast<std::uint8_t>(Pick(rng, 1, 15))));
        break;
    }
  }
  switch (Pick(rng, 0, 4)) {
    case 0:
    case 1:
      break;  // >= 1
    case 2:
      p.criminals.op = CountOp::kEq;
      p.criminals.k = Pick(rng, 1, n);
      break;
    case 3:
      p.criminals.op = Coin(rng) ? CountOp::kLe : CountOp::kGe;
      p.criminals.k = Pick(rng, 0, n);
      break;
    default: {
      const int a = Pick(rng, 0, n);
      const int b = Pick(rng, 0, n);
      p.criminals.allowed = {std::min(a, b)};
      if (a != b) p.criminals.allowed.push_back(std::max(a, b));
      break;
    }
  }
  switch (Pick(rng, 0, 7)) {
    case 0:
      p.type_cardinality.at_most_distinct = Pick(rng, 1, 3);
      break;
    case 1:
      p.type_cardinality.exact.push_back(
          {Pick(rng, 0, n), TypeSet::Of(Coin(rng) ? Island::kTruthTellers
                                                  : Island::kLiars)});
      break;
    case 2:
      if (n == 4) p.type_cardinality.one_of_each = true;
      break;
    default:
      break;
  }

  FormulaOptions options;
  options.persons = n;
  options.max_depth = 2;
  options.knows_whodunit = Coin(rng, 0.3);
  if (Coin(rng, 0.3)) options.free_atoms = {"likes_potatoes"};
  const int statements = Pick(rng, 0, 4);
  for (int i = 0; i < statements; ++i) {
    Statement s;
    s.label = "s" + std::to_string(i);
    s.speaker = Pick(rng, 0, n - 1);
    s.body = RandomFormula(rng, options);
    p.statements.push_back(std::move(s));
    options.labels.push_back(p.statements.back().label);
  }
  if (Coin(rng, 0.3)) {
    options.max_depth = 1;
    p.axioms.push_back(RandomFormula(rng, options));
  }
  p.Validate();
  return p;
}

World RandomWorld(std::mt19937_64& rng, const Puzzle& puzzle) {
  World w;
  for (int i = 0; i < puzzle.size(); ++i) w.types.push_back(AnyType(rng));
  for (int i = 0; i < puzzle.size(); ++i) w.SetGuilty(i, Coin(rng));
  for (const std::string& atom : puzzle.FreeAtoms()) {
    w.free_values[atom] = Coin(rng);
  }
  for (PersonId p : puzzle.KnowsWhodunitPersons()) {
    w.knows_whodunit[p] = Coin(rng);
  }
  return w;
}

std::vector<World> OracleWorlds(const Puzzle& puzzle) {
  const int n = puzzle.size();
  const std::vector<std::string> atoms = puzzle.FreeAtoms();
  const std::vector<PersonId> knowers = puzzle.KnowsWhodunitPersons();
  const int bits = static_cast<int>(atoms.size() + knowers.size());

  std::vector<World> out;
  std::vector<int> digits(n, 0);
  for (;;) {
    World w;
    for (int d : digits) w.types.push_back(kAllSpeakerTypes[d]);
    for (GuiltMask g = 0; g < (GuiltMask{1} << n); ++g) {
      w.guilty = g;
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << bits); ++a) {
        int bit = 0;
        for (const std::string& atom : atoms) {
          w.free_values[atom] = (a >> bit++) & 1u;
        }
        for (PersonId p : knowers) w.knows_whodunit[p] = (a >> bit++) & 1u;
        if (CheckWorld(puzzle, w).ok) out.push_back(w);
      }
    }
    int i = n - 1;
    while (i >= 0 && digits[i] == 3) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Answer BruteForcePossibility(const KnowledgeWorld& kw, PersonId p,
                             const Question& q) {
  const int n = kw.size();
  // Bit n stands for the detective, who only matters to the detective
  // questions.
  const bool detective = q.kind == Question::Kind::kDidDetectiveDoIt ||
                         q.kind == Question::Kind::kDetectivePossible;
  const int universe = detective ? n + 1 : n;
  auto compatible = [&](std::uint64_t s) {
    if (s == 0) return false;
    for (PersonId r = 0; r < n; ++r) {
      const bool in = (s >> r) & 1u;
      if (r == p && in != kw.guilty(p)) return false;
      const Knowledge k = kw.knowledge(p, r);
      if (k == Knowledge::kKnowsGuilty && !in) return false;
      if (k == Knowledge::kKnowsInnocent && in) return false;
    }
    const int size = std::popcount(s);
    if (kw.count_public() && size != *kw.count_public()) return false;
    if (detective && kw.guilty(p) && kw.GuiltyCount() == 1 && size != 1) {
      return false;
    }
    return true;
  };
  std::vector<std::uint64_t> family;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << universe); ++s) {
    if (compatible(s)) family.push_back(s);
  }
  auto any = [&](auto pred) {
    return std::any_of(family.begin(), family.end(), pred);
  };
  std::uint64_t list = 0;
  for (PersonId r : q.people) list |= std::uint64_t{1} << r;
  switch (q.kind) {
    case Question::Kind::kPossibleSubset:
      return Answer::FromBool(
          any([&](std::uint64_t s) { return (s & ~list) == 0; }));
    case Question::Kind::kPossibleExact:
      return Answer::FromBool(any([&](std::uint64_t s) { return s == list; }));
    case Question::Kind::kPossibleSizeExcludingSelf:
      return Answer::FromBool(any([&](std::uint64_t s) {
        return std::popcount(s) == q.m && ((s >> p) & 1u) == 0;
      }));
    case Question::Kind::kPossibleInnocent:
      return Answer::FromBool(
          any([&](std::uint64_t s) { return ((s >> q.target) & 1u) == 0; }));
    case Question::Kind::kDetectivePossible:
      return Answer::FromBool(
          any([&](std::uint64_t s) { return (s >> n) & 1u; }));
    case Question::Kind::kDidDetectiveDoIt:
      return any([&](std::uint64_t s) { return (s >> n) & 1u; })
                 ? Answer::Unknown()
                 : Answer::No();
    default:
      throw std::logic_error("not a possibility question");
  }
}

KnowledgeWorld RandomKnowledgeWorld(std::mt19937_64& rng, int max_n,
                                    bool allow_count_public) {
  const int n = Pick(rng, 1, max_n);
  std::vector<SpeakerType> types(n);
  for (SpeakerType& t : types) t = AnyType(rng);
  std::vector<bool> guilty(n);
  do {
    for (int i = 0; i < n; ++i) guilty[i] = Coin(rng);
  } while (std::none_of(guilty.begin(), guilty.end(),
                        [](bool g) { return g; }));
  const double density = std::uniform_real_distribution<double>(0, 1)(rng);
  std::vector<std::vector<Knowledge>> knowledge(
      n, std::vector<Knowledge>(n, Knowledge::kUnknown));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && Coin(rng, density)) {
        knowledge[a][b] =
            guilty[b] ? Knowledge::kKnowsGuilty : Knowledge::kKnowsInnocent;
      }
    }
  }
  std::optional<int> count;
  if (allow_count_public && Coin(rng)) {
    count = static_cast<int>(std::count(guilty.begin(), guilty.end(), true));
  }
  return KnowledgeWorld(std::move(types), std::move(guilty),
                        std::move(knowledge), count);
}

int EzraLiarsIslandSurvivors(int* candidates) {
  constexpr SpeakerType AL = SpeakerType::kAbsoluteLiar;
  constexpr SpeakerType RL = SpeakerType::kResponsibleLiar;
  enum { kAndrew, kNeil, kBen };
  using Types = std::array<SpeakerType, 3>;
  using Guilt = std::array<bool, 3>;
  struct Sentence {
    int speaker;
    std::function<bool(const Types&, const Guilt&)> says;
  };
  auto lies_about_guilt = [](SpeakerType t, bool guilty) {
    return t == AL || (t == RL && !guilty);
  };
  // Neil's self-referential remark is not modeled.
  const std::vector<Sentence> sentences = {
      {kAndrew, [](const Types&, const Guilt& g) { return !g[kAndrew]; }},
      {kAndrew,
       [&](const Types& t, const Guilt& g) {
         return lies_about_guilt(t[kBen], g[kBen]);
       }},
      {kBen, [](const Types&, const Guilt& g) { return g[kBen]; }},
      {kBen, [](const Types&, const Guilt& g) { return g[kNeil]; }},
      {kNeil, [](const Types&, const Guilt& g) { return !g[kNeil]; }},
      {kNeil,
       [](const Types&, const Guilt& g) {
         return g[kBen] && !g[kAndrew] && !g[kNeil];
       }},
  };
  int survivors = 0;
  *candidates = 0;
  for (int tm = 0; tm < 8; ++tm) {
    const Types types = {(tm & 1) ? RL : AL, (tm & 2) ? RL : AL,
                         (tm & 4) ? RL : AL};
    for (int gm = 0; gm < 8; ++gm) {
      ++*candidates;
      if (gm == 0) continue;  // somebody did it
      const Guilt g = {(gm & 1) != 0, (gm & 2) != 0, (gm & 4) != 0};
      bool ok = true;
      for (const Sentence& s : sentences) {
        Guilt seen = g;
        // A responsible liar's sentence is judged as if they were innocent.
        if (types[s.speaker] == RL) seen[s.speaker] = false;
        if (s.says(types, seen)) ok = false;
      }
      survivors += ok;
    }
  }
  return survivors;
}

std::vector<TokenAt> FindBodyTokens(const std::string& text,
                                    const std::string& pattern) {
  const std::regex re(pattern);
  std::vector<TokenAt> out;
  std::istringstream in(text);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    const auto start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    if (line.compare(start, 9, "statement") != 0 &&
        line.compare(start, 5, "axiom") != 0) {
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos || line.find('"') != std::string::npos) {
      continue;
    }
    const std::string body = line.substr(colon + 1);
    for (std::sregex_iterator it(body.begin(), body.end(), re), end;
         it != end; ++it) {
      out.push_back({n, static_cast<int>(colon + 2 + it->position()),
                     it->str()});
    }
  }
  return out;
}

std::string ReplaceToken(const std::string& text, const TokenAt& at,
                         const std::string& with) {
  std::istringstream in(text);
  std::string out, line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (n == at.line) line.replace(at.column - 1, at.text.size(), with);
    out += line + "\n";
  }
  return out;
}

}  // namespace islanders::testing
