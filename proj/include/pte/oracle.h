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

#ifndef PTE_ORACLE_H_
#define PTE_ORACLE_H_

#include <set>
#include <vector>

#include "pte/game.h"

namespace pte {

// Level sets recomputed from scratch by full scans of Σ at every level.
// Shares nothing with the elimination code beyond Game::payoff; keep it
// that way, it exists to catch bugs there.
struct OracleLevelSets {
  std::vector<std::set<StrategyProfile>> levels;  // S_0 .. S_{fixpoint+1}
  int fixpoint_level = 1;

  // S_k for any k >= 0.
  const std::set<StrategyProfile>& SetAt(int k) const;
};

OracleLevelSets ComputeOracleLevelSets(const Game& game);

}  // namespace pte

#endif  // PTE_ORACLE_H_
