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

#include "pte/oracle.h"

#include <algorithm>
#include <optional>

namespace pte {
namespace {

std::vector<StrategyProfile> AllProfiles(const Game& game) {
  std::vector<StrategyProfile> out{StrategyProfile(std::vector<int>{})};
  for (Player p = 0; p < game.num_players(); ++p) {
    std::vector<StrategyProfile> next;
    for (const auto& prefix : out) {
      for (int s = 0; s < game.num_strategies(p); ++s) {
        std::vector<int> choices = prefix.choices();
        choices.push_back(s);
        next.emplace_back(std::move(choices));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

const std::set<StrategyProfile>& OracleLevelSets::SetAt(int k) const {
  return levels[std::min<std::size_t>(k, levels.size() - 1)];
}

OracleLevelSets ComputeOracleLevelSets(const Game& game) {
  const std::vector<StrategyProfile> sigma = AllProfiles(game);
  OracleLevelSets out;
  out.levels.emplace_back(sigma.begin(), sigma.end());

  for (int k = 1;; ++k) {
    const std::set<StrategyProfile>& prev = out.levels.back();
    std::set<StrategyProfile> next;
    for (const StrategyProfile& candidate : sigma) {
      if (!prev.contains(candidate)) continue;
      bool keep = true;
      for (Player i = 0; i < game.num_players() && keep; ++i) {
        // max over tau_i with some surviving (tau_i, tau_-i) ...
        std::optional<Payoff> maximin;
        for (int tau_i = 0; tau_i < game.num_strategies(i); ++tau_i) {
          // ... of min over surviving (tau_i, tau_-i).
          std::optional<Payoff> row_min;
          for (const StrategyProfile& tau : sigma) {
            if (tau[i] != tau_i || !prev.contains(tau)) continue;
            const Payoff u = game.payoff(tau, i);
            if (!row_min || u < *row_min) row_min = u;
          }
          if (row_min && (!maximin || *row_min > *maximin)) maximin = row_min;
        }
        keep = maximin && game.payoff(candidate, i) >= *maximin;
      }
      if (keep) next.insert(candidate);
    }
    const bool stable = next == prev;
    const bool empty = next.empty();
    out.levels.push_back(std::move(next));
    if (empty) {
      out.fixpoint_level = k;
      break;
    }
    if (stable) {
      out.fixpoint_level = std::max(1, k - 1);
      break;
    }
  }
  return out;
}

}  // namespace pte
