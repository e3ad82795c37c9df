// Copyright 2026 The PTE Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTE_FORMULA_H_
#define PTE_FORMULA_H_

#include <memory>
#include <string>
#include <vector>

#include "pte/game.h"
#include "pte/kripke.h"

namespace pte {

// Immutable modal formula. Copies share the underlying tree.
//
// Text syntax (ASCII):
//
//   true  false  RAT  KS  omn(k)  play(B,X)  play_1(A)
//   !A  box A  dia A  dia_c A      (prefix operators, tightest)
//   A & B    A | B    A -> B    A <-> B
//
// Binding from tightest to loosest: prefix operators, &, |, ->, <->.
// & | and <-> associate to the left, -> to the right. play_N uses 1-based
// player numbers. Strategy labels come from the game; a label containing
// characters other than [A-Za-z0-9_] is written in double quotes.
class Formula {
 public:
  enum class Op {
    kTrue,
    kRat,
    kKnowsStrategies,
    kOmniscience,
    kPlay,
    kPlayAgent,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kBox,
    kDiamond,
    kDiamondC,
  };

  static Formula True();
  static Formula False() { return Not(True()); }
  static Formula Rat();
  static Formula KnowsStrategies();
  // Throws std::invalid_argument if k < 1.
  static Formula Omniscience(int k);
  static Formula Play(StrategyProfile profile);
  static Formula PlayAgent(StrategyId strategy);
  static Formula Not(Formula a);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Implies(Formula a, Formula b);
  static Formula Iff(Formula a, Formula b);
  static Formula Box(Formula a);
  static Formula Diamond(Formula a);
  static Formula DiamondC(Formula a);

  Op op() const;
  int omniscience_level() const;
  const StrategyProfile& profile() const;
  StrategyId strategy() const;
  std::size_t arity() const;
  const Formula& child(std::size_t i) const;

  // Stable identity of the shared tree node, used as a memo key.
  const void* id() const { return node_.get(); }

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  static Formula Make(Op op, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

// Throws ParseError (line 1, 1-based column) on syntax errors and unknown
// labels or player numbers.
Formula ParseFormula(const std::string& text, const Game& game);

// Canonical text form; ParseFormula(FormulaToString(f)) == f.
std::string FormulaToString(const Formula& formula, const Game& game);

// "(B,X)@2". Throws ParseError on malformed input.
World ParseWorldLiteral(const std::string& text, const Game& game);

}  // namespace pte

#endif  // PTE_FORMULA_H_
