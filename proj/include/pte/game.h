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

#ifndef PTE_GAME_H_
#define PTE_GAME_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pte {

// Players are indexed 0..num_players-1.
using Player = int;

// Payoffs are ordinal: only their order matters.
using Payoff = int;

// Position of a profile in EnumerateProfiles() order.
using ProfileIndex = std::size_t;

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The game violates a structural requirement (dimensions, no-ties, ...).
class InvalidGameError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct StrategyId {
  Player player = 0;
  int index = 0;

  friend auto operator<=>(const StrategyId&, const StrategyId&) = default;
};

// One strategy index per player, ordered by player.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<int> choices)
      : choices_(std::move(choices)) {}
  StrategyProfile(std::initializer_list<int> choices) : choices_(choices) {}

  int operator[](Player p) const { return choices_.at(p); }
  int size() const { return static_cast<int>(choices_.size()); }
  const std::vector<int>& choices() const { return choices_; }

  // Same profile with player `p` switched to `strategy`.
  StrategyProfile With(Player p, int strategy) const;

  friend auto operator<=>(const StrategyProfile&,
                          const StrategyProfile&) = default;

 private:
  std::vector<int> choices_;
};

// A finite normal-form game. Immutable after construction.
//
// Payoffs are stored per player as a flat vector in EnumerateProfiles()
// order: lexicographic with player 0 most significant.
class Game {
 public:
  // Throws InvalidGameError on inconsistent dimensions. Ties are allowed
  // here; use ValidateGame() to detect them.
  Game(std::vector<std::string> player_labels,
       std::vector<std::vector<std::string>> strategy_labels,
       std::vector<std::vector<Payoff>> payoffs);

  // Game with default labels "P1".."Pn" and strategies "0".."m-1".
  static Game FromCounts(const std::vector<int>& strategy_counts,
                         std::vector<std::vector<Payoff>> payoffs);

  int num_players() const { return static_cast<int>(player_labels_.size()); }
  int num_strategies(Player p) const;
  const std::vector<int>& strategy_counts() const { return counts_; }
  std::size_t num_profiles() const { return num_profiles_; }

  // Throws std::out_of_range for invalid profiles or players.
  Payoff payoff(const StrategyProfile& profile, Player p) const;
  Payoff payoff(ProfileIndex index, Player p) const;
  const std::vector<Payoff>& payoffs(Player p) const;

  ProfileIndex IndexOf(const StrategyProfile& profile) const;
  StrategyProfile ProfileAt(ProfileIndex index) const;
  bool IsValidProfile(const StrategyProfile& profile) const;

  const std::string& player_label(Player p) const;
  const std::string& strategy_label(Player p, int s) const;
  const std::vector<std::string>& player_labels() const {
    return player_labels_;
  }
  const std::vector<std::vector<std::string>>& strategy_labels() const {
    return strategy_labels_;
  }

  // Returns the strategy index for a label, or -1.
  int FindStrategy(Player p, const std::string& label) const;

  // "(B,X)" using strategy labels.
  std::string ProfileToString(const StrategyProfile& profile) const;
  std::string ProfileToString(ProfileIndex index) const {
    return ProfileToString(ProfileAt(index));
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<std::string> player_labels_;
  std::vector<std::vector<std::string>> strategy_labels_;
  std::vector<std::vector<Payoff>> payoffs_;
  std::vector<int> counts_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
};

// All profiles, lexicographic by (player 0 strategy, player 1 strategy, ...).
std::vector<StrategyProfile> EnumerateProfiles(const Game& game);

struct Violation {
  enum class Kind { kDuplicatePayoff };

  Kind kind = Kind::kDuplicatePayoff;
  Player player = 0;
  Payoff value = 0;
  std::vector<StrategyProfile> profiles;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks the no-ties condition: for every player, payoffs over all profiles
// are pairwise distinct. One violation per (player, repeated value).
ValidationReport ValidateGame(const Game& game);

// Throws InvalidGameError describing the first violation if ties exist.
void RequireNoTies(const Game& game);

std::string DescribeViolation(const Game& game, const Violation& violation);

}  // namespace pte

#endif  // PTE_GAME_H_
