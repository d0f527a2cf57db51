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

// Propositional formulas over guilt, type, count and meta atoms. Formulas are
// immutable and share structure, so copying one is cheap.

#ifndef ISLANDERS_FORMULA_H_
#define ISLANDERS_FORMULA_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "islanders/speaker_type.h"

namespace islanders {

// Index of a suspect within its puzzle (declaration order).
using PersonId = int;

enum class CountOp { kEq, kLe, kGe };

std::string_view CountOpSymbol(CountOp op);
bool CompareCount(CountOp op, int lhs, int rhs);

class Formula {
 public:
  enum class Kind {
    kTrue,
    kFalse,
    kGuilty,
    kHasType,
    kFromIsland,
    kCount,
    kTruthful,
    kLiesAboutGuilt,
    kKnowsWhodunit,
    kFree,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
  };

  // Defaults to the constant true.
  Formula();

  static Formula True();
  static Formula False();
  static Formula Constant(bool value) { return value ? True() : False(); }
  static Formula Guilty(PersonId person);
  static Formula HasType(PersonId person, SpeakerType type);
  static Formula FromIsland(PersonId person, Island island);
  static Formula Count(CountOp op, int k);
  static Formula Truthful(std::string label);
  static Formula LiesAboutGuilt(PersonId person);
  static Formula KnowsWhodunit(PersonId person);
  static Formula Free(std::string name);
  static Formula Not(Formula operand);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  bool IsAtom() const { return kind() < Kind::kNot; }
  bool IsConnective() const { return !IsAtom(); }

  // Atom payloads. Only meaningful for the matching kinds.
  PersonId person() const { return node_->person; }
  SpeakerType type() const { return node_->type; }
  Island island() const { return node_->island; }
  CountOp count_op() const { return node_->op; }
  int count() const { return node_->k; }
  // Statement label for kTruthful, atom name for kFree.
  const std::string& text() const { return node_->text; }

  // kNot has one child, binary connectives two.
  const Formula& operand() const { return node_->children[0]; }
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  const std::vector<Formula>& children() const { return node_->children; }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

  // Pre-order traversal over every sub-formula including this one.
  void Visit(const std::function<void(const Formula&)>& fn) const;

  bool Mentions(Kind kind) const;
  bool MentionsGuiltyOf(PersonId person) const;

 private:
  struct Node {
    Kind kind = Kind::kTrue;
    PersonId person = 0;
    SpeakerType type = SpeakerType::kAbsoluteTruthTeller;
    Island island = Island::kTruthTellers;
    CountOp op = CountOp::kEq;
    int k = 0;
    std::string text;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Node node);
  static Formula Binary(Kind kind, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

// Renders a formula in the puzzle language, with suspect names resolved
// through `names`. Binary connectives are always parenthesized.
std::string ToString(const Formula& formula,
                     const std::vector<std::string>& names);

}  // namespace islanders

#endif  // ISLANDERS_FORMULA_H_
