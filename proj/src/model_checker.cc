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

#include "pte/model_checker.h"

namespace pte {

bool EvalContext::Eval(WorldId w, const Formula& formula) {
  if (!memo_) return EvalUncached(w, formula);
  pinned_.try_emplace(formula.id(), formula);
  const auto key = std::make_pair(w, formula.id());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const bool value = EvalUncached(w, formula);
  cache_.emplace(key, value);
  return value;
}

bool EvalContext::EvalUncached(WorldId w, const Formula& f) {
  using Op = Formula::Op;
  const CanonicalStructure& s = structure_;
  const bool possible = s.IsLogicallyPossible(w);
  const bool normal = s.IsNormal(w);
  switch (f.op()) {
    case Op::kTrue:
      return true;
    case Op::kRat:
      return EvalRat(w);
    case Op::kKnowsStrategies:
      return EvalKnowledge(w);
    case Op::kOmniscience:
      return EvalOmniscience(w, f.omniscience_level());
    case Op::kPlay:
    case Op::kPlayAgent:
      if (!possible) return EvalImpossibleAtom(w, f);
      if (f.op() == Op::kPlay) {
        return s.ProfileOf(w) == s.game().IndexOf(f.profile());
      }
      return s.StrategyOf(w, f.strategy().player) == f.strategy().index;
    case Op::kNot:
      return !Eval(w, f.child(0));
    case Op::kAnd:
      return Eval(w, f.child(0)) && Eval(w, f.child(1));
    case Op::kOr:
      // ¬(¬A ∧ ¬B)
      return !(!Eval(w, f.child(0)) && !Eval(w, f.child(1)));
    case Op::kImplies:
      // ¬A ∨ B
      return !Eval(w, f.child(0)) || Eval(w, f.child(1));
    case Op::kIff: {
      const bool a = Eval(w, f.child(0));
      const bool b = Eval(w, f.child(1));
      return (!a || b) && (!b || a);
    }
    case Op::kBox:
      return normal && Necessity(w, f.child(0));
    case Op::kDiamond:
      return !normal || Possibility(w, f.child(0));
    case Op::kDiamondC:
      return !normal || DiamondC(w, f.child(0));
  }
  return false;
}

bool EvalContext::EvalImpossibleAtom(WorldId w, const Formula& f) {
  const ImpossibleAtoms& atoms = structure_.ImpossibleValuation(w);
  const Game& game = structure_.game();
  switch (f.op()) {
    case Formula::Op::kRat:
      return atoms.rat;
    case Formula::Op::kKnowsStrategies:
      return atoms.knows_strategies;
    case Formula::Op::kOmniscience:
      return atoms.omniscience_level == f.omniscience_level();
    case Formula::Op::kPlay:
      return atoms.played == game.IndexOf(f.profile());
    case Formula::Op::kPlayAgent:
      return game.ProfileAt(atoms.played)[f.strategy().player] ==
             f.strategy().index;
    default:
      throw std::logic_error("not an atom");
  }
}

bool EvalContext::EvalRat(WorldId w) {
  const CanonicalStructure& s = structure_;
  if (!s.IsLogicallyPossible(w)) {
    return s.ImpossibleValuation(w).rat;
  }
  const Game& game = s.game();
  const ProfileIndex played = s.ProfileOf(w);
  for (Player i = 0; i < game.num_players(); ++i) {
    const Payoff current = game.payoff(played, i);
    for (int t = 0; t < game.num_strategies(i); ++t) {
      const WorldId deviation = s.ClosestState(w, i, t);
      if (!s.LogicallyAccessible(w, deviation, i)) continue;
      if (game.payoff(s.ProfileOf(deviation), i) > current) return false;
    }
  }
  return true;
}

bool EvalContext::EvalKnowledge(WorldId w) {
  const CanonicalStructure& s = structure_;
  if (!s.IsLogicallyPossible(w)) {
    return s.ImpossibleValuation(w).knows_strategies;
  }
  for (Player i = 0; i < s.num_players(); ++i) {
    for (WorldId other : s.EpistemicSuccessors(w, i)) {
      if (s.ProfileOf(other) != s.ProfileOf(w)) return false;
    }
  }
  return true;
}

bool EvalContext::EvalOmniscience(WorldId w, int k) {
  if (!memo_) return EvalOmniscienceUncached(w, k);
  const auto key = std::make_pair(w, k);
  if (auto it = omniscience_cache_.find(key); it != omniscience_cache_.end()) {
    return it->second;
  }
  const bool value = EvalOmniscienceUncached(w, k);
  omniscience_cache_.emplace(key, value);
  return value;
}

bool EvalContext::EvalOmniscienceUncached(WorldId w, int k) {
  const CanonicalStructure& s = structure_;
  if (k < 1) return false;
  if (!s.IsLogicallyPossible(w)) {
    return s.ImpossibleValuation(w).omniscience_level == k;
  }
  if (k == 1) return !s.IsNormal(w);
  if (!s.IsNormal(w)) return false;

  const Game& game = s.game();
  // Every deviation lands in a world with level-(k-1) omniscience.
  for (Player i = 0; i < game.num_players(); ++i) {
    for (int t = 0; t < game.num_strategies(i); ++t) {
      if (t == s.StrategyOf(w, i)) continue;
      if (!EvalOmniscience(s.ClosestState(w, i, t), k - 1)) return false;
    }
  }
  // Some world with the same profile, accessible for every agent, has
  // level-(k-1) omniscience.
  const ProfileIndex played = s.ProfileOf(w);
  for (int level = 0; level <= s.max_level(); ++level) {
    const WorldId other = s.Id(played, level);
    bool accessible = true;
    for (Player i = 0; i < game.num_players() && accessible; ++i) {
      accessible = s.LogicallyAccessible(w, other, i);
    }
    if (accessible && EvalOmniscience(other, k - 1)) return true;
  }
  return false;
}

bool EvalContext::Necessity(WorldId w, const Formula& formula) {
  const CanonicalStructure& s = structure_;
  if (!s.IsNormal(w)) return false;
  for (WorldId other = 0; other < s.num_worlds(); ++other) {
    for (Player i = 0; i < s.num_players(); ++i) {
      if (s.LogicallyAccessible(w, other, i)) {
        if (!Eval(other, formula)) return false;
        break;
      }
    }
  }
  return true;
}

bool EvalContext::Possibility(WorldId w, const Formula& formula) {
  const CanonicalStructure& s = structure_;
  if (!s.IsNormal(w)) return true;
  // ¬□¬A: some world accessible for some agent satisfies A.
  for (WorldId other = 0; other < s.num_worlds(); ++other) {
    for (Player i = 0; i < s.num_players(); ++i) {
      if (s.LogicallyAccessible(w, other, i)) {
        if (Eval(other, formula)) return true;
        break;
      }
    }
  }
  return false;
}

bool EvalContext::DiamondC(WorldId w, const Formula& formula) {
  const CanonicalStructure& s = structure_;
  const Game& game = s.game();
  for (Player i = 0; i < game.num_players(); ++i) {
    for (int t = 0; t < game.num_strategies(i); ++t) {
      if (t == s.StrategyOf(w, i)) continue;
      const WorldId deviation = s.ClosestState(w, i, t);
      bool accessible = false;
      for (Player j = 0; j < game.num_players() && !accessible; ++j) {
        accessible = s.LogicallyAccessible(w, deviation, j);
      }
      if (accessible && Eval(deviation, formula)) return true;
    }
  }
  return false;
}

}  // namespace pte
