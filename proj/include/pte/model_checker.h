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

#ifndef PTE_MODEL_CHECKER_H_
#define PTE_MODEL_CHECKER_H_

#include <map>
#include <unordered_map>
#include <utility>

#include "pte/formula.h"
#include "pte/kripke.h"

namespace pte {

// Evaluates formulas on a canonical structure under three regimes:
//
//  * impossible worlds read atoms from the manual valuation table and
//    combine them with ! and &; box is false, dia and dia_c are true;
//  * non-normal possible worlds use the real atom semantics; box is false,
//    dia and dia_c are true;
//  * normal worlds use full semantics: box A holds iff A holds at every
//    world logically accessible for every agent, and dia_c A holds iff some
//    logically accessible deviation f(w, i, s'), s' != σ_i(w), satisfies A.
//
// A context caches results per (world, formula node) and per (world, OMN
// level). One context is meant for one sequential evaluation session; the
// structure must outlive it.
class EvalContext {
 public:
  enum class Memo { kOn, kOff };

  explicit EvalContext(const CanonicalStructure& structure,
                       Memo memo = Memo::kOn)
      : structure_(structure), memo_(memo == Memo::kOn) {}

  const CanonicalStructure& structure() const { return structure_; }

  bool Eval(WorldId w, const Formula& formula);

  // Rationality: no logically accessible deviation strictly improves the
  // deviator. Impossible worlds read the valuation table.
  bool EvalRat(WorldId w);

  // Knowledge of strategies: every epistemically accessible world has the
  // same profile.
  bool EvalKnowledge(WorldId w);

  // Level-k logical omniscience, evaluated through its recursive definition.
  bool EvalOmniscience(WorldId w, int k);

  bool Necessity(WorldId w, const Formula& formula);
  bool Possibility(WorldId w, const Formula& formula);

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<WorldId, const void*>& k) const {
      return std::hash<const void*>()(k.second) ^ (k.first * 0x9E3779B97F4A7C15ull);
    }
  };

  bool EvalUncached(WorldId w, const Formula& formula);
  bool EvalImpossibleAtom(WorldId w, const Formula& formula);
  bool EvalOmniscienceUncached(WorldId w, int k);
  bool DiamondC(WorldId w, const Formula& formula);

  const CanonicalStructure& structure_;
  bool memo_;
  std::unordered_map<std::pair<WorldId, const void*>, bool, KeyHash> cache_;
  std::map<std::pair<WorldId, int>, bool> omniscience_cache_;
  // Roots whose node addresses key cache_; held so addresses are not reused.
  std::unordered_map<const void*, Formula> pinned_;
};

}  // namespace pte

#endif  // PTE_MODEL_CHECKER_H_
