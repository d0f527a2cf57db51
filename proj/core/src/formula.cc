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

#include "islanders/formula.h"

#include <utility>

namespace islanders {

std::string_view CountOpSymbol(CountOp op) {
  switch (op) {
    case CountOp::kEq:
      return "=";
    case CountOp::kLe:
      return "<=";
    case CountOp::kGe:
      return ">=";
  }
  return "?";
}

bool CompareCount(CountOp op, int lhs, int rhs) {
  switch (op) {
    case CountOp::kEq:
      return lhs == rhs;
    case CountOp::kLe:
      return lhs <= rhs;
    case CountOp::kGe:
      return lhs >= rhs;
  }
  return false;
}

Formula::Formula() : Formula(True()) {}

Formula Formula::Make(Node node) {
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::True() {
  static const Formula* const kTrue =
      new Formula(std::make_shared<const Node>(Node{.kind = Kind::kTrue}));
  return *kTrue;
}

Formula Formula::False() {
  static const Formula* const kFalse =
      new Formula(std::make_shared<const Node>(Node{.kind = Kind::kFalse}));
  return *kFalse;
}

Formula Formula::Guilty(PersonId person) {
  return Make({.kind = Kind::kGuilty, .person = person});
}

Formula Formula::HasType(PersonId person, SpeakerType type) {
  return Make({.kind = Kind::kHasType, .person = person, .type = type});
}

Formula Formula::FromIsland(PersonId person, Island island) {
  return Make({.kind = Kind::kFromIsland, .person = person, .island = island});
}

Formula Formula::Count(CountOp op, int k) {
  return Make({.kind = Kind::kCount, .op = op, .k = k});
}

Formula Formula::Truthful(std::string label) {
  return Make({.kind = Kind::kTruthful, .text = std::move(label)});
}

Formula Formula::LiesAboutGuilt(PersonId person) {
  return Make({.kind = Kind::kLiesAboutGuilt, .person = person});
}

Formula Formula::KnowsWhodunit(PersonId person) {
  return Make({.kind = Kind::kKnowsWhodunit, .person = person});
}

Formula Formula::Free(std::string name) {
  return Make({.kind = Kind::kFree, .text = std::move(name)});
}

Formula Formula::Not(Formula operand) {
  return Make({.kind = Kind::kNot, .children = {std::move(operand)}});
}

Formula Formula::Binary(Kind kind, Formula lhs, Formula rhs) {
  return Make({.kind = kind, .children = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::And(Formula lhs, Formula rhs) {
  return Binary(Kind::kAnd, std::move(lhs), std::move(rhs));
}

Formula Formula::Or(Formula lhs, Formula rhs) {
  return Binary(Kind::kOr, std::move(lhs), std::move(rhs));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Binary(Kind::kImplies, std::move(lhs), std::move(rhs));
}

Formula Formula::Iff(Formula lhs, Formula rhs) {
  return Binary(Kind::kIff, std::move(lhs), std::move(rhs));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return true;
    case Formula::Kind::kGuilty:
    case Formula::Kind::kLiesAboutGuilt:
    case Formula::Kind::kKnowsWhodunit:
      return x.person == y.person;
    case Formula::Kind::kHasType:
      return x.person == y.person && x.type == y.type;
    case Formula::Kind::kFromIsland:
      return x.person == y.person && x.island == y.island;
    case Formula::Kind::kCount:
      return x.op == y.op && x.k == y.k;
    case Formula::Kind::kTruthful:
    case Formula::Kind::kFree:
      return x.text == y.text;
    default:
      return x.children == y.children;
  }
}

void Formula::Visit(const std::function<void(const Formula&)>& fn) const {
  fn(*this);
  for (const Formula& child : children()) child.Visit(fn);
}

bool Formula::Mentions(Kind k) const {
  if (kind() == k) return true;
  for (const Formula& child : children()) {
    if (child.Mentions(k)) return true;
  }
  return false;
}

bool Formula::MentionsGuiltyOf(PersonId p) const {
  if (kind() == Kind::kGuilty) return person() == p;
  for (const Formula& child : children()) {
    if (child.MentionsGuiltyOf(p)) return true;
  }
  return false;
}

namespace {

std::string QuoteString(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string PersonName(PersonId p, const std::vector<std::string>& names) {
  if (p >= 0 && p < static_cast<int>(names.size())) return names[p];
  return "#" + std::to_string(p);
}

void Render(const Formula& f, const std::vector<std::string>& names,
            std::string& out) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      out += "true";
      return;
    case Kind::kFalse:
      out += "false";
      return;
    case Kind::kGuilty:
      out += "guilty(" + PersonName(f.person(), names) + ")";
      return;
    case Kind::kHasType:
      out += "type(" + PersonName(f.person(), names) + ")=";
      out += ShortName(f.type());
      return;
    case Kind::kFromIsland:
      out += "island(" + PersonName(f.person(), names) + ")=";
      out += IslandName(f.island());
      return;
    case Kind::kCount:
      out += "count";
      out += CountOpSymbol(f.count_op());
      out += std::to_string(f.count());
      return;
    case Kind::kTruthful:
      out += "truthful(" + f.text() + ")";
      return;
    case Kind::kLiesAboutGuilt:
      out += "lies_about_guilt(" + PersonName(f.person(), names) + ")";
      return;
    case Kind::kKnowsWhodunit:
      out += "knows_whodunit(" + PersonName(f.person(), names) + ")";
      return;
    case Kind::kFree:
      out += "free(" + QuoteString(f.text()) + ")";
      return;
    case Kind::kNot:
      out += "not ";
      Render(f.operand(), names, out);
      return;
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff: {
      static constexpr std::string_view kOps[] = {" and ", " or ", " -> ",
                                                  " <-> "};
      out += "(";
      Render(f.lhs(), names, out);
      out += kOps[static_cast<int>(f.kind()) - static_cast<int>(Kind::kAnd)];
      Render(f.rhs(), names, out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string ToString(const Formula& formula,
                     const std::vector<std::string>& names) {
  std::string out;
  Render(formula, names, out);
  return out;
}

}  // namespace islanders
