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

#ifndef PTE_ELIMINATION_H_
#define PTE_ELIMINATION_H_

#include <optional>
#include <string>
#include <vector>

#include "pte/game.h"

namespace pte {

// A subset of the profiles of one game, keyed by ProfileIndex.
class ProfileSet {
 public:
  ProfileSet() = default;
  explicit ProfileSet(std::size_t universe_size)
      : bits_(universe_size, false) {}
  static ProfileSet All(std::size_t universe_size);

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool Contains(ProfileIndex i) const { return i < bits_.size() && bits_[i]; }
  void Insert(ProfileIndex i);

  // Members in increasing index order.
  std::vector<ProfileIndex> Indices() const;
  bool IsSubsetOf(const ProfileSet& other) const;

  friend bool operator==(const ProfileSet&, const ProfileSet&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

// S_k: the profiles that are level-k individually rational.
struct LevelSet {
  int level = 0;
  ProfileSet members;
};

// Maximin threshold of one player; nullopt means DIVERGED (empty domain).
using Threshold = std::optional<Payoff>;

struct MaximinThresholds {
  int level = 1;
  std::vector<Threshold> values;  // one per player
};

struct Outcome {
  enum class Kind { kUniquePte, kNoEquilibrium, kMultipleAtFixpoint };

  Kind kind = Kind::kNoEquilibrium;
  std::vector<ProfileIndex> profiles;  // the fixpoint set
};

// A profile that passes the level-k threshold test without being in
// S_{k-1}. The intersection removes it; the entry records that it happened.
struct NestingAuditEntry {
  int level = 0;
  ProfileIndex profile = 0;
};

// The full elimination history S_0 ⊇ S_1 ⊇ ... of one game.
struct LevelTrace {
  // levels[k] is S_k. The sequence ends at the first repeated or empty set.
  std::vector<LevelSet> levels;
  // thresholds[k - 1] holds the thresholds used to build S_k.
  std::vector<MaximinThresholds> thresholds;
  // Smallest k >= 1 with S_k = S_{k+1}; S_j = S_k for all j >= k.
  int fixpoint_level = 1;
  Outcome outcome;
  std::vector<NestingAuditEntry> nesting_audit;

  // S_k for any k >= 0; levels past the end repeat the fixpoint set.
  const ProfileSet& SetAt(int k) const;
};

// Max over strategies of `player` present in `surviving` of the min payoff
// over the surviving profiles using that strategy.
Threshold MaximinThreshold(const Game& game, const ProfileSet& surviving,
                           Player player);

MaximinThresholds ComputeThresholds(const Game& game, const LevelSet& previous);

// {σ ∈ previous | u_i(σ) >= threshold_i for all i}, at level previous+1.
LevelSet EliminateStep(const Game& game, const LevelSet& previous);

// Throws InvalidGameError if the game has ties.
LevelTrace ComputeTrace(const Game& game);

Outcome ComputePte(const Game& game);

bool IsLevelKIndividuallyRational(const LevelTrace& trace, ProfileIndex profile,
                                  int k);
bool IsLevelKIndividuallyRational(const Game& game,
                                  const StrategyProfile& profile, int k);

std::vector<ProfileIndex> PureNash(const Game& game);

// No other profile weakly improves every player and strictly improves one.
bool IsParetoOptimal(const Game& game, ProfileIndex profile);
bool IsParetoOptimal(const Game& game, const StrategyProfile& profile);
std::vector<ProfileIndex> ParetoOptimalSet(const Game& game);

// Two players, equal strategy counts and u_2(a, b) = u_1(b, a).
bool IsSymmetric(const Game& game);

// The diagonal profile (s, s) maximizing u_1(s, s). Throws InvalidGameError
// unless the game is symmetric and tie-free.
StrategyProfile HofstadterProfile(const Game& game);

struct ComparisonReport {
  Outcome pte;
  std::vector<ProfileIndex> pure_nash;
  std::vector<ProfileIndex> individually_rational;  // S_1
  std::vector<ProfileIndex> pareto_optimal;
  std::optional<StrategyProfile> hofstadter;  // symmetric games only
};

ComparisonReport Compare(const Game& game);

std::string OutcomeToString(const Game& game, const Outcome& outcome);
std::string ProfileSetToString(const Game& game,
                               const std::vector<ProfileIndex>& profiles);

}  // namespace pte

#endif  // PTE_ELIMINATION_H_
