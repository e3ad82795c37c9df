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

#include "pte/elimination.h"

#include <algorithm>
#include <utility>

namespace pte {

ProfileSet ProfileSet::All(std::size_t universe_size) {
  ProfileSet set(universe_size);
  set.bits_.assign(universe_size, true);
  set.count_ = universe_size;
  return set;
}

void ProfileSet::Insert(ProfileIndex i) {
  if (!bits_.at(i)) {
    bits_[i] = true;
    ++count_;
  }
}

std::vector<ProfileIndex> ProfileSet::Indices() const {
  std::vector<ProfileIndex> out;
  out.reserve(count_);
  for (ProfileIndex i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

bool ProfileSet::IsSubsetOf(const ProfileSet& other) const {
  for (ProfileIndex i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.Contains(i)) return false;
  }
  return true;
}

const ProfileSet& LevelTrace::SetAt(int k) const {
  if (k < 0) throw std::out_of_range("negative elimination level");
  const std::size_t last = levels.size() - 1;
  return levels[std::min<std::size_t>(static_cast<std::size_t>(k), last)]
      .members;
}

Threshold MaximinThreshold(const Game& game, const ProfileSet& surviving,
                           Player player) {
  if (surviving.empty()) return std::nullopt;
  // Per strategy of `player`: the worst payoff among surviving profiles.
  std::vector<Threshold> worst(game.num_strategies(player));
  for (ProfileIndex i : surviving.Indices()) {
    const int s = game.ProfileAt(i)[player];
    const Payoff u = game.payoff(i, player);
    if (!worst[s] || u < *worst[s]) worst[s] = u;
  }
  Threshold best;
  for (const Threshold& w : worst) {
    if (w && (!best || *w > *best)) best = w;
  }
  return best;
}

MaximinThresholds ComputeThresholds(const Game& game,
                                    const LevelSet& previous) {
  MaximinThresholds out;
  out.level = previous.level + 1;
  for (Player p = 0; p < game.num_players(); ++p) {
    out.values.push_back(MaximinThreshold(game, previous.members, p));
  }
  return out;
}

namespace {

bool MeetsThresholds(const Game& game, ProfileIndex i,
                     const MaximinThresholds& thresholds) {
  for (Player p = 0; p < game.num_players(); ++p) {
    const Threshold& t = thresholds.values[p];
    if (!t || game.payoff(i, p) < *t) return false;
  }
  return true;
}

}  // namespace

LevelSet EliminateStep(const Game& game, const LevelSet& previous) {
  LevelSet next{previous.level + 1, ProfileSet(game.num_profiles())};
  if (previous.members.empty()) return next;
  const MaximinThresholds thresholds = ComputeThresholds(game, previous);
  for (ProfileIndex i : previous.members.Indices()) {
    if (MeetsThresholds(game, i, thresholds)) next.members.Insert(i);
  }
  return next;
}

LevelTrace ComputeTrace(const Game& game) {
  RequireNoTies(game);
  LevelTrace trace;
  trace.levels.push_back({0, ProfileSet::All(game.num_profiles())});
  while (true) {
    const LevelSet& previous = trace.levels.back();
    MaximinThresholds thresholds = ComputeThresholds(game, previous);
    // Audit the unrestricted threshold filter against S_{k-1}.
    if (!previous.members.empty()) {
      for (ProfileIndex i = 0; i < game.num_profiles(); ++i) {
        if (!previous.members.Contains(i) &&
            MeetsThresholds(game, i, thresholds)) {
          trace.nesting_audit.push_back({thresholds.level, i});
        }
      }
    }
    LevelSet next = EliminateStep(game, previous);
    const bool stable = next.members == previous.members;
    const bool empty = next.members.empty();
    const int k = next.level;
    trace.thresholds.push_back(std::move(thresholds));
    trace.levels.push_back(std::move(next));
    if (empty) {
      trace.fixpoint_level = k;
      break;
    }
    if (stable) {
      trace.fixpoint_level = std::max(1, k - 1);
      break;
    }
  }

  const ProfileSet& final_set = trace.SetAt(trace.fixpoint_level);
  trace.outcome.profiles = final_set.Indices();
  if (final_set.empty()) {
    trace.outcome.kind = Outcome::Kind::kNoEquilibrium;
  } else if (final_set.size() == 1) {
    trace.outcome.kind = Outcome::Kind::kUniquePte;
  } else {
    trace.outcome.kind = Outcome::Kind::kMultipleAtFixpoint;
  }
  return trace;
}

Outcome ComputePte(const Game& game) { return ComputeTrace(game).outcome; }

bool IsLevelKIndividuallyRational(const LevelTrace& trace, ProfileIndex profile,
                                  int k) {
  return trace.SetAt(k).Contains(profile);
}

bool IsLevelKIndividuallyRational(const Game& game,
                                  const StrategyProfile& profile, int k) {
  if (k == 0) return game.IsValidProfile(profile);
  return IsLevelKIndividuallyRational(ComputeTrace(game), game.IndexOf(profile),
                                      k);
}

std::vector<ProfileIndex> PureNash(const Game& game) {
  std::vector<ProfileIndex> out;
  for (ProfileIndex i = 0; i < game.num_profiles(); ++i) {
    const StrategyProfile profile = game.ProfileAt(i);
    bool stable = true;
    for (Player p = 0; p < game.num_players() && stable; ++p) {
      const Payoff current = game.payoff(i, p);
      for (int s = 0; s < game.num_strategies(p); ++s) {
        if (game.payoff(profile.With(p, s), p) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(i);
  }
  return out;
}

bool IsParetoOptimal(const Game& game, ProfileIndex profile) {
  for (ProfileIndex other = 0; other < game.num_profiles(); ++other) {
    bool weakly_better = true;
    bool strictly_better = false;
    for (Player p = 0; p < game.num_players(); ++p) {
      const Payoff a = game.payoff(other, p);
      const Payoff b = game.payoff(profile, p);
      if (a < b) weakly_better = false;
      if (a > b) strictly_better = true;
    }
    if (weakly_better && strictly_better) return false;
  }
  return true;
}

bool IsParetoOptimal(const Game& game, const StrategyProfile& profile) {
  return IsParetoOptimal(game, game.IndexOf(profile));
}

std::vector<ProfileIndex> ParetoOptimalSet(const Game& game) {
  std::vector<ProfileIndex> out;
  for (ProfileIndex i = 0; i < game.num_profiles(); ++i) {
    if (IsParetoOptimal(game, i)) out.push_back(i);
  }
  return out;
}

bool IsSymmetric(const Game& game) {
  if (game.num_players() != 2) return false;
  const int n = game.num_strategies(0);
  if (game.num_strategies(1) != n) return false;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (game.payoff(StrategyProfile{a, b}, 1) !=
          game.payoff(StrategyProfile{b, a}, 0)) {
        return false;
      }
    }
  }
  return true;
}

StrategyProfile HofstadterProfile(const Game& game) {
  if (!IsSymmetric(game)) {
    throw InvalidGameError(
        "the superrational profile needs a symmetric two-player game");
  }
  RequireNoTies(game);
  int best = 0;
  for (int s = 1; s < game.num_strategies(0); ++s) {
    if (game.payoff(StrategyProfile{s, s}, 0) >
        game.payoff(StrategyProfile{best, best}, 0)) {
      best = s;
    }
  }
  return StrategyProfile{best, best};
}

ComparisonReport Compare(const Game& game) {
  const LevelTrace trace = ComputeTrace(game);
  ComparisonReport report;
  report.pte = trace.outcome;
  report.pure_nash = PureNash(game);
  report.individually_rational = trace.SetAt(1).Indices();
  report.pareto_optimal = ParetoOptimalSet(game);
  if (IsSymmetric(game)) report.hofstadter = HofstadterProfile(game);
  return report;
}

std::string ProfileSetToString(const Game& game,
                               const std::vector<ProfileIndex>& profiles) {
  std::string out = "{";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (i > 0) out += ",";
    out += game.ProfileToString(profiles[i]);
  }
  return out + "}";
}

std::string OutcomeToString(const Game& game, const Outcome& outcome) {
  switch (outcome.kind) {
    case Outcome::Kind::kUniquePte:
      return "PTE " + game.ProfileToString(outcome.profiles.front());
    case Outcome::Kind::kNoEquilibrium:
      return "NONE";
    case Outcome::Kind::kMultipleAtFixpoint:
      return "MULTIPLE " + ProfileSetToString(game, outcome.profiles);
  }
  return "";
}

}  // namespace pte
