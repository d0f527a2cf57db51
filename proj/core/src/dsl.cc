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

#include "islanders/dsl.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "islanders/errors.h"

namespace islanders {

ParseError::ParseError(SourceSpan span, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error(std::to_string(span.line) + ":" +
                         std::to_string(span.column) + ": " + message),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

// {{{ Lexer

enum class TokenKind {
  kIdent,
  kInt,
  kString,
  kPunct,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // identifier, digits, punctuation, or decoded string
  std::string raw;   // verbatim source slice
  SourceSpan span;
};

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentChar(char c) { return IsIdentStart(c) || (c >= '0' && c <= '9'); }

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t Utf8Length(std::string_view s, std::size_t i) {
  const auto b = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0 && b >= 0xC2) {
    len = 2;
  } else if ((b & 0xF0) == 0xE0) {
    len = 3;
  } else if ((b & 0xF8) == 0xF0 && b <= 0xF4) {
    len = 4;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return 0;
  }
  return len;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> tokens;
    for (;;) {
      SkipSpaceAndComments();
      if (pos_ >= text_.size()) {
        tokens.push_back(Token{TokenKind::kEnd, "", "", Here(0)});
        return tokens;
      }
      tokens.push_back(Next());
    }
  }

 private:
  SourceSpan Here(int length) const { return {line_, column_, length}; }

  void Advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance(1);
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
      } else {
        return;
      }
    }
  }

  Token Make(TokenKind kind, std::size_t length, std::string text) {
    Token t{kind, std::move(text), std::string(text_.substr(pos_, length)),
            Here(static_cast<int>(length))};
    Advance(length);
    return t;
  }

  Token Next() {
    const char c = text_[pos_];
    if (IsIdentStart(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && IsIdentChar(text_[end])) ++end;
      return Make(TokenKind::kIdent, end - pos_,
                  std::string(text_.substr(pos_, end - pos_)));
    }
    if (IsDigit(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && IsDigit(text_[end])) ++end;
      if (end < text_.size() && IsIdentChar(text_[end])) {
        std::size_t bad = end;
        while (bad < text_.size() && IsIdentChar(text_[bad])) ++bad;
        throw ParseError(Here(static_cast<int>(bad - pos_)),
                         "malformed number '" +
                             std::string(text_.substr(pos_, bad - pos_)) +
                             "'");
      }
      if (end - pos_ > 9) {
        throw ParseError(Here(static_cast<int>(end - pos_)),
                         "number '" +
                             std::string(text_.substr(pos_, end - pos_)) +
                             "' is too large");
      }
      return Make(TokenKind::kInt, end - pos_,
                  std::string(text_.substr(pos_, end - pos_)));
    }
    if (c == '"') return String();
    static constexpr std::string_view kPunct[] = {
        "<->", "->", "<=", ">=", "{", "}", "(", ")", ",", ";", ":", "="};
    for (std::string_view p : kPunct) {
      if (text_.substr(pos_, p.size()) == p) {
        return Make(TokenKind::kPunct, p.size(), std::string(p));
      }
    }
    std::size_t len = Utf8Length(text_, pos_);
    if (len == 0) {
      throw ParseError(Here(1), "invalid UTF-8 byte in input");
    }
    throw ParseError(Here(static_cast<int>(len)),
                     "unexpected character '" +
                         std::string(text_.substr(pos_, len)) + "'");
  }

  Token String() {
    std::string decoded;
    std::size_t end = pos_ + 1;
    for (;;) {
      if (end >= text_.size() || text_[end] == '\n') {
        throw ParseError(Here(static_cast<int>(end - pos_)),
                         "unterminated string literal");
      }
      const char c = text_[end];
      if (c == '"') break;
      if (c == '\\') {
        if (end + 1 < text_.size() &&
            (text_[end + 1] == '"' || text_[end + 1] == '\\')) {
          decoded += text_[end + 1];
          end += 2;
          continue;
        }
        throw ParseError(Here(static_cast<int>(end + 1 - pos_)),
                         "invalid escape in string literal");
      }
      const std::size_t len = Utf8Length(text_, end);
      if (len == 0) {
        throw ParseError(Here(static_cast<int>(end + 1 - pos_)),
                         "invalid UTF-8 in string literal");
      }
      decoded.append(text_.substr(end, len));
      end += len;
    }
    return Make(TokenKind::kString, end + 1 - pos_, std::move(decoded));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// }}}

// {{{ Parser

const std::vector<std::string> kAtomKeywords = {
    "guilty",         "type",           "island", "count", "truthful",
    "lies_about_guilt", "knows_whodunit", "free",   "true",  "false",
    "not",            "("};

const std::vector<std::string> kItemKeywords = {
    "suspects", "island", "types",     "criminals", "typecount",
    "statement", "axiom", "}"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Puzzle Parse() {
    const Token& head = ExpectKeyword("puzzle");
    if (Peek().kind == TokenKind::kIdent) puzzle_.name = Take().text;
    ExpectPunct("{");
    while (!IsPunct(Peek(), "}")) {
      if (Peek().kind == TokenKind::kEnd) {
        Fail(Peek(), "unexpected end of input inside puzzle block",
             kItemKeywords);
      }
      ParseItem();
    }
    const Token& close = Take();
    if (Peek().kind != TokenKind::kEnd) {
      Fail(Peek(), "unexpected '" + Peek().raw + "' after puzzle block",
           {"end of input"});
    }
    Finish(head, close);
    return std::move(puzzle_);
  }

 private:
  // -- token helpers

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Take() {
    const Token& t = Peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  static bool IsPunct(const Token& t, std::string_view p) {
    return t.kind == TokenKind::kPunct && t.text == p;
  }
  static bool IsKeyword(const Token& t, std::string_view k) {
    return t.kind == TokenKind::kIdent && t.text == k;
  }

  static std::string Describe(const Token& t) {
    if (t.kind == TokenKind::kEnd) return "end of input";
    return "'" + t.raw + "'";
  }

  [[noreturn]] static void Fail(const Token& t, std::string message,
                                std::vector<std::string> expected = {}) {
    throw ParseError(t.span, std::move(message), std::move(expected));
  }

  [[noreturn]] static void FailExpected(const Token& t,
                                        std::vector<std::string> expected) {
    std::string list;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) list += i + 1 == expected.size() ? " or " : ", ";
      list += "'" + expected[i] + "'";
    }
    Fail(t, "unexpected " + Describe(t) + ", expected " + list,
         std::move(expected));
  }

  const Token& ExpectPunct(std::string_view p) {
    if (!IsPunct(Peek(), p)) FailExpected(Peek(), {std::string(p)});
    return Take();
  }
  const Token& ExpectKeyword(std::string_view k) {
    if (!IsKeyword(Peek(), k)) FailExpected(Peek(), {std::string(k)});
    return Take();
  }
  const Token& ExpectIdent(std::string_view what) {
    if (Peek().kind != TokenKind::kIdent) FailExpected(Peek(), {std::string(what)});
    return Take();
  }
  int ExpectInt() {
    if (Peek().kind != TokenKind::kInt) FailExpected(Peek(), {"integer"});
    return std::stoi(Take().text);
  }

  // -- items

  void ParseItem() {
    const Token& t = Peek();
    if (IsKeyword(t, "suspects")) return ParseSuspects();
    if (IsKeyword(t, "island")) return ParseIslandItem();
    if (IsKeyword(t, "types")) return ParseTypes();
    if (IsKeyword(t, "criminals")) return ParseCriminals();
    if (IsKeyword(t, "typecount")) return ParseTypeCount();
    if (IsKeyword(t, "statement")) return ParseStatement();
    if (IsKeyword(t, "axiom")) return ParseAxiom();
    Fail(t, "unexpected " + Describe(t) + ", expected a puzzle item",
         kItemKeywords);
  }

  void ParseSuspects() {
    const Token& kw = Take();
    if (suspects_declared_) Fail(kw, "duplicate 'suspects' declaration");
    suspects_declared_ = true;
    for (;;) {
      const Token& name = ExpectIdent("suspect name");
      if (puzzle_.FindSuspect(name.text)) {
        Fail(name, "duplicate suspect '" + name.text + "'");
      }
      puzzle_.suspects.push_back(name.text);
      if (IsPunct(Peek(), ",")) {
        Take();
        continue;
      }
      break;
    }
    ExpectPunct(";");
  }

  void ParseIslandItem() {
    const Token& kw = Take();
    if (island_.has_value()) Fail(kw, "duplicate 'island' declaration");
    const Token& which = Peek();
    if (IsKeyword(which, "truthtellers")) {
      island_ = TypeSet::Of(Island::kTruthTellers);
    } else if (IsKeyword(which, "liars")) {
      island_ = TypeSet::Of(Island::kLiars);
    } else if (IsKeyword(which, "mixed")) {
      island_ = TypeSet::All();
    } else {
      FailExpected(which, {"truthtellers", "liars", "mixed"});
    }
    Take();
    ExpectPunct(";");
  }

  PersonId ExpectSuspect() {
    const Token& name = ExpectIdent("suspect name");
    return ResolvePerson(name);
  }

  PersonId ResolvePerson(const Token& name) {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
      if (it->first == name.text) return it->second;
    }
    if (auto p = puzzle_.FindSuspect(name.text)) return *p;
    Fail(name, "unknown suspect '" + name.text + "'");
  }

  SpeakerType ExpectType() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kIdent) {
      if (auto type = ParseSpeakerType(t.text)) {
        Take();
        return *type;
      }
    }
    if (t.kind == TokenKind::kIdent) {
      Fail(t, "unknown speaker type '" + t.text + "'", {"AT", "PT", "AL", "RL"});
    }
    FailExpected(t, {"AT", "PT", "AL", "RL"});
  }

  TypeSet ParseTypeList(const Token& owner_for_error) {
    const Token& open = ExpectPunct("{");
    (void)open;
    TypeSet set;
    if (IsPunct(Peek(), "}")) {
      Fail(Peek(), "empty type domain for '" + owner_for_error.text + "'",
           {"AT", "PT", "AL", "RL"});
    }
    for (;;) {
      set.Insert(ExpectType());
      if (IsPunct(Peek(), ",")) {
        Take();
        continue;
      }
      break;
    }
    ExpectPunct("}");
    return set;
  }

  void ParseTypes() {
    Take();
    const Token& name = ExpectIdent("suspect name");
    const PersonId p = ResolvePerson(name);
    if (type_overrides_.contains(p)) {
      Fail(name, "duplicate 'types' declaration for '" + name.text + "'");
    }
    ExpectPunct(":");
    type_overrides_[p] = ParseTypeList(name);
    ExpectPunct(";");
  }

  std::optional<CountOp> TryCountOp() {
    if (IsPunct(Peek(), "=")) return CountOp::kEq;
    if (IsPunct(Peek(), "<=")) return CountOp::kLe;
    if (IsPunct(Peek(), ">=")) return CountOp::kGe;
    return std::nullopt;
  }

  void ParseCriminals() {
    const Token& kw = Take();
    if (criminals_declared_) Fail(kw, "duplicate 'criminals' declaration");
    criminals_declared_ = true;
    CountConstraint c;
    if (auto op = TryCountOp()) {
      Take();
      c.op = *op;
      c.k = ExpectInt();
    } else if (IsKeyword(Peek(), "in")) {
      Take();
      ExpectPunct("{");
      std::set<int> allowed;
      for (;;) {
        allowed.insert(ExpectInt());
        if (IsPunct(Peek(), ",")) {
          Take();
          continue;
        }
        break;
      }
      ExpectPunct("}");
      c.allowed.assign(allowed.begin(), allowed.end());
    } else {
      FailExpected(Peek(), {"=", "<=", ">=", "in"});
    }
    ExpectPunct(";");
    puzzle_.criminals = std::move(c);
  }

  TypeSet ParseTypeClass() {
    const Token& t = Peek();
    if (IsKeyword(t, "truthtellers")) {
      Take();
      return TypeSet::Of(Island::kTruthTellers);
    }
    if (IsKeyword(t, "liars")) {
      Take();
      return TypeSet::Of(Island::kLiars);
    }
    if (IsPunct(t, "{")) return ParseTypeList(t);
    if (t.kind == TokenKind::kIdent && ParseSpeakerType(t.text)) {
      return TypeSet{ExpectType()};
    }
    FailExpected(t, {"truthtellers", "liars", "AT", "PT", "AL", "RL", "{"});
  }

  void ParseTypeCount() {
    Take();
    const Token& t = Peek();
    TypeCardinality& card = puzzle_.type_cardinality;
    if (IsKeyword(t, "one_of_each")) {
      Take();
      card.one_of_each = true;
    } else if (IsKeyword(t, "exactly")) {
      Take();
      ExactTypeCount rule;
      rule.n = ExpectInt();
      rule.types = ParseTypeClass();
      card.exact.push_back(rule);
    } else if (IsKeyword(t, "at_most_distinct")) {
      Take();
      if (card.at_most_distinct.has_value()) {
        Fail(t, "duplicate 'at_most_distinct' rule");
      }
      card.at_most_distinct = ExpectInt();
    } else {
      FailExpected(t, {"one_of_each", "exactly", "at_most_distinct"});
    }
    ExpectPunct(";");
  }

  void ParseStatement() {
    Take();
    const Token& label = ExpectIdent("statement label");
    if (puzzle_.FindStatement(label.text)) {
      Fail(label, "duplicate statement label '" + label.text + "'");
    }
    Statement s;
    s.label = label.text;
    s.speaker = ExpectSuspect();
    ExpectPunct(":");
    if (IsKeyword(Peek(), "unmodeled") && Peek(1).kind == TokenKind::kString) {
      Take();
      s.unmodeled_text = Take().text;
    } else {
      current_statement_ = static_cast<int>(puzzle_.statements.size());
      s.body = ParseFormula();
      current_statement_ = -1;
    }
    ExpectPunct(";");
    puzzle_.statements.push_back(std::move(s));
  }

  void ParseAxiom() {
    Take();
    for (Formula& f : ParseQuantified()) puzzle_.axioms.push_back(std::move(f));
    ExpectPunct(";");
  }

  // 'forall X:' re-parses its body once per suspect with X bound.
  std::vector<Formula> ParseQuantified() {
    if (!IsKeyword(Peek(), "forall")) return {ParseFormula()};
    Take();
    const Token& var = ExpectIdent("variable name");
    if (puzzle_.FindSuspect(var.text)) {
      Fail(var, "quantified variable '" + var.text +
                    "' shadows a suspect name");
    }
    ExpectPunct(":");
    if (puzzle_.suspects.empty()) {
      Fail(var, "forall used before any suspects are declared");
    }
    const std::size_t body_start = pos_;
    std::vector<Formula> out;
    for (PersonId p = 0; p < puzzle_.size(); ++p) {
      pos_ = body_start;
      bindings_.emplace_back(var.text, p);
      for (Formula& f : ParseQuantified()) out.push_back(std::move(f));
      bindings_.pop_back();
      if (out.size() > kMaxExpandedAxioms) {
        Fail(var, "forall expands to more than " +
                      std::to_string(kMaxExpandedAxioms) + " axioms");
      }
    }
    return out;
  }

  // -- formulas

  Formula ParseFormula() { return ParseIff(); }

  Formula ParseIff() {
    Formula lhs = ParseImplies();
    while (IsPunct(Peek(), "<->")) {
      Take();
      lhs = Formula::Iff(std::move(lhs), ParseImplies());
    }
    return lhs;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (IsPunct(Peek(), "->")) {
      Take();
      return Formula::Implies(std::move(lhs), ParseImplies());
    }
    return lhs;
  }

  Formula ParseOr() {
    Formula lhs = ParseAnd();
    while (IsKeyword(Peek(), "or")) {
      Take();
      lhs = Formula::Or(std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  Formula ParseAnd() {
    Formula lhs = ParseUnary();
    while (IsKeyword(Peek(), "and")) {
      Take();
      lhs = Formula::And(std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  Formula ParseUnary() {
    if (++depth_ > kMaxDepth) Fail(Peek(), "formula nested too deeply");
    Formula f;
    if (IsKeyword(Peek(), "not")) {
      Take();
      f = Formula::Not(ParseUnary());
    } else {
      f = ParsePrimary();
    }
    --depth_;
    return f;
  }

  PersonId ParsePersonArg() {
    ExpectPunct("(");
    const PersonId p = ExpectSuspect();
    ExpectPunct(")");
    return p;
  }

  Formula ParsePrimary() {
    const Token& t = Peek();
    if (IsPunct(t, "(")) {
      Take();
      Formula inner = ParseFormula();
      ExpectPunct(")");
      return inner;
    }
    if (t.kind != TokenKind::kIdent) {
      Fail(t, "unexpected " + Describe(t) + ", expected a formula",
           kAtomKeywords);
    }
    const std::string& kw = t.text;
    if (kw == "true") {
      Take();
      return Formula::True();
    }
    if (kw == "false") {
      Take();
      return Formula::False();
    }
    if (kw == "guilty") {
      Take();
      return Formula::Guilty(ParsePersonArg());
    }
    if (kw == "type") {
      Take();
      const PersonId p = ParsePersonArg();
      ExpectPunct("=");
      return Formula::HasType(p, ExpectType());
    }
    if (kw == "island") {
      Take();
      const PersonId p = ParsePersonArg();
      ExpectPunct("=");
      const Token& which = Peek();
      auto island = which.kind == TokenKind::kIdent ? ParseIsland(which.text)
                                                    : std::nullopt;
      if (!island) FailExpected(which, {"truthtellers", "liars"});
      Take();
      return Formula::FromIsland(p, *island);
    }
    if (kw == "count") {
      Take();
      auto op = TryCountOp();
      if (!op) FailExpected(Peek(), {"=", "<=", ">="});
      Take();
      return Formula::Count(*op, ExpectInt());
    }
    if (kw == "truthful") {
      Take();
      ExpectPunct("(");
      const Token& label = ExpectIdent("statement label");
      ExpectPunct(")");
      truthful_refs_.push_back({label, current_statement_});
      return Formula::Truthful(label.text);
    }
    if (kw == "lies_about_guilt") {
      Take();
      return Formula::LiesAboutGuilt(ParsePersonArg());
    }
    if (kw == "knows_whodunit") {
      Take();
      return Formula::KnowsWhodunit(ParsePersonArg());
    }
    if (kw == "free") {
      Take();
      ExpectPunct("(");
      if (Peek().kind != TokenKind::kString) FailExpected(Peek(), {"string"});
      const Token& name = Take();
      if (name.text.empty()) Fail(name, "free atom name must not be empty");
      ExpectPunct(")");
      return Formula::Free(name.text);
    }
    Fail(t, "unknown atom '" + kw + "'", kAtomKeywords);
  }

  // -- validation

  void Finish(const Token& head, const Token& close) {
    if (!suspects_declared_) Fail(head, "puzzle declares no suspects");
    const TypeSet fallback = island_.value_or(TypeSet::All());
    puzzle_.type_domains.assign(puzzle_.suspects.size(), fallback);
    for (const auto& [p, domain] : type_overrides_) {
      puzzle_.type_domains[p] = domain;
    }
    for (const TruthfulRef& ref : truthful_refs_) {
      const auto& statements = puzzle_.statements;
      auto it = std::find_if(
          statements.begin(), statements.end(),
          [&](const Statement& s) { return s.label == ref.label.text; });
      if (it == statements.end()) {
        Fail(ref.label, "unknown statement '" + ref.label.text + "'");
      }
      const int index = static_cast<int>(it - statements.begin());
      if (ref.statement >= 0 && index >= ref.statement) {
        Fail(ref.label, "cyclic truthful reference: '" + ref.label.text +
                            "' is not an earlier statement");
      }
      if (!it->modeled()) {
        Fail(ref.label, "truthful(" + ref.label.text +
                            ") references an unmodeled statement");
      }
    }
    try {
      puzzle_.Validate();
    } catch (const std::runtime_error& e) {
      Fail(close, e.what());
    }
  }

  struct TruthfulRef {
    Token label;
    int statement;  // index of the enclosing statement, -1 for axioms
  };

  static constexpr int kMaxDepth = 256;
  static constexpr std::size_t kMaxExpandedAxioms = 100000;

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  Puzzle puzzle_;
  bool suspects_declared_ = false;
  bool criminals_declared_ = false;
  std::optional<TypeSet> island_;
  std::map<PersonId, TypeSet> type_overrides_;
  std::vector<std::pair<std::string, PersonId>> bindings_;
  std::vector<TruthfulRef> truthful_refs_;
  int current_statement_ = -1;
};

// }}}

// {{{ Writer

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string TypeClassText(TypeSet set) {
  if (set == TypeSet::Of(Island::kTruthTellers)) return "truthtellers";
  if (set == TypeSet::Of(Island::kLiars)) return "liars";
  if (set.size() == 1) return std::string(ShortName(set.Members().front()));
  return ToString(set);
}

}  // namespace

Puzzle ParsePuzzle(std::string_view text) {
  return Parser(Lexer(text).Tokenize()).Parse();
}

std::string SerializePuzzle(const Puzzle& puzzle) {
  std::string out = "puzzle ";
  if (!puzzle.name.empty()) out += puzzle.name + " ";
  out += "{\n";

  out += "  suspects ";
  for (std::size_t i = 0; i < puzzle.suspects.size(); ++i) {
    if (i > 0) out += ", ";
    out += puzzle.suspects[i];
  }
  out += ";\n";

  // The island line covers the most suspects; ties go to mixed, then
  // truthtellers, then liars.
  const std::pair<TypeSet, std::string_view> islands[] = {
      {TypeSet::All(), "mixed"},
      {TypeSet::Of(Island::kTruthTellers), "truthtellers"},
      {TypeSet::Of(Island::kLiars), "liars"}};
  std::size_t best = 0;
  long best_count = -1;
  for (std::size_t i = 0; i < 3; ++i) {
    const long count = std::count(puzzle.type_domains.begin(),
                                  puzzle.type_domains.end(), islands[i].first);
    if (count > best_count) {
      best = i;
      best_count = count;
    }
  }
  out += "  island " + std::string(islands[best].second) + ";\n";
  for (std::size_t p = 0; p < puzzle.type_domains.size(); ++p) {
    if (puzzle.type_domains[p] != islands[best].first) {
      out += "  types " + puzzle.suspects[p] + ": " +
             ToString(puzzle.type_domains[p]) + ";\n";
    }
  }

  if (puzzle.criminals.IsSet()) {
    out += "  criminals in {";
    for (std::size_t i = 0; i < puzzle.criminals.allowed.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(puzzle.criminals.allowed[i]);
    }
    out += "};\n";
  } else {
    out += "  criminals " + std::string(CountOpSymbol(puzzle.criminals.op)) +
           " " + std::to_string(puzzle.criminals.k) + ";\n";
  }

  const TypeCardinality& card = puzzle.type_cardinality;
  if (card.one_of_each) out += "  typecount one_of_each;\n";
  for (const ExactTypeCount& rule : card.exact) {
    out += "  typecount exactly " + std::to_string(rule.n) + " " +
           TypeClassText(rule.types) + ";\n";
  }
  if (card.at_most_distinct) {
    out += "  typecount at_most_distinct " +
           std::to_string(*card.at_most_distinct) + ";\n";
  }

  for (const Statement& s : puzzle.statements) {
    out += "  statement " + s.label + " " + puzzle.suspects[s.speaker] + ": ";
    out += s.modeled() ? ToString(*s.body, puzzle.suspects)
                       : "unmodeled " + Quote(s.unmodeled_text);
    out += ";\n";
  }
  for (const Formula& axiom : puzzle.axioms) {
    out += "  axiom " + ToString(axiom, puzzle.suspects) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace islanders
