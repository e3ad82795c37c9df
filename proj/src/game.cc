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

#include "pte/game.h"

#include <map>
#include <sstream>
#include <utility>

namespace pte {

namespace {

std::string WithPosition(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(WithPosition(message, line, column)),
      line_(line),
      column_(column) {}

StrategyProfile StrategyProfile::With(Player p, int strategy) const {
  std::vector<int> choices = choices_;
  choices.at(p) = strategy;
  return StrategyProfile(std::move(choices));
}

Game::Game(std::vector<std::string> player_labels,
           std::vector<std::vector<std::string>> strategy_labels,
           std::vector<std::vector<Payoff>> payoffs)
    : player_labels_(std::move(player_labels)),
      strategy_labels_(std::move(strategy_labels)),
      payoffs_(std::move(payoffs)) {
  if (player_labels_.empty()) {
    throw InvalidGameError("a game needs at least one player");
  }
  const std::size_t n = player_labels_.size();
  if (strategy_labels_.size() != n) {
    std::ostringstream msg;
    msg << "expected strategy lists for " << n << " players, got "
        << strategy_labels_.size();
    throw InvalidGameError(msg.str());
  }
  if (payoffs_.size() != n) {
    std::ostringstream msg;
    msg << "expected payoff arrays for " << n << " players, got "
        << payoffs_.size();
    throw InvalidGameError(msg.str());
  }
  counts_.resize(n);
  num_profiles_ = 1;
  for (std::size_t p = 0; p < n; ++p) {
    if (strategy_labels_[p].empty()) {
      throw InvalidGameError("player " + player_labels_[p] +
                             " has no strategies");
    }
    counts_[p] = static_cast<int>(strategy_labels_[p].size());
    num_profiles_ *= strategy_labels_[p].size();
  }
  strides_.assign(n, 1);
  for (std::size_t p = n - 1; p > 0; --p) {
    strides_[p - 1] = strides_[p] * counts_[p];
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (payoffs_[p].size() != num_profiles_) {
      std::ostringstream msg;
      msg << "payoff array of player " << player_labels_[p] << " has "
          << payoffs_[p].size() << " entries, expected " << num_profiles_;
      throw InvalidGameError(msg.str());
    }
  }
}

Game Game::FromCounts(const std::vector<int>& strategy_counts,
                      std::vector<std::vector<Payoff>> payoffs) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  for (std::size_t p = 0; p < strategy_counts.size(); ++p) {
    players.push_back("P" + std::to_string(p + 1));
    std::vector<std::string> labels;
    for (int s = 0; s < strategy_counts[p]; ++s) {
      labels.push_back(std::to_string(s));
    }
    strategies.push_back(std::move(labels));
  }
  return Game(std::move(players), std::move(strategies), std::move(payoffs));
}

int Game::num_strategies(Player p) const { return counts_.at(p); }

bool Game::IsValidProfile(const StrategyProfile& profile) const {
  if (profile.size() != num_players()) return false;
  for (Player p = 0; p < num_players(); ++p) {
    if (profile[p] < 0 || profile[p] >= counts_[p]) return false;
  }
  return true;
}

ProfileIndex Game::IndexOf(const StrategyProfile& profile) const {
  if (!IsValidProfile(profile)) {
    throw std::out_of_range("strategy profile does not belong to the game");
  }
  ProfileIndex index = 0;
  for (Player p = 0; p < num_players(); ++p) {
    index += strides_[p] * profile[p];
  }
  return index;
}

StrategyProfile Game::ProfileAt(ProfileIndex index) const {
  if (index >= num_profiles_) {
    throw std::out_of_range("profile index out of range");
  }
  std::vector<int> choices(counts_.size());
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    choices[p] = static_cast<int>(index / strides_[p]);
    index %= strides_[p];
  }
  return StrategyProfile(std::move(choices));
}

Payoff Game::payoff(const StrategyProfile& profile, Player p) const {
  return payoff(IndexOf(profile), p);
}

Payoff Game::payoff(ProfileIndex index, Player p) const {
  return payoffs_.at(p).at(index);
}

const std::vector<Payoff>& Game::payoffs(Player p) const {
  return payoffs_.at(p);
}

const std::string& Game::player_label(Player p) const {
  return player_labels_.at(p);
}

const std::string& Game::strategy_label(Player p, int s) const {
  return strategy_labels_.at(p).at(s);
}

int Game::FindStrategy(Player p, const std::string& label) const {
  const auto& labels = strategy_labels_.at(p);
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (labels[s] == label) return static_cast<int>(s);
  }
  return -1;
}

std::string Game::ProfileToString(const StrategyProfile& profile) const {
  std::string out = "(";
  for (Player p = 0; p < profile.size(); ++p) {
    if (p > 0) out += ",";
    out += strategy_label(p, profile[p]);
  }
  return out + ")";
}

std::vector<StrategyProfile> EnumerateProfiles(const Game& game) {
  std::vector<StrategyProfile> out;
  out.reserve(game.num_profiles());
  for (ProfileIndex i = 0; i < game.num_profiles(); ++i) {
    out.push_back(game.ProfileAt(i));
  }
  return out;
}

ValidationReport ValidateGame(const Game& game) {
  ValidationReport report;
  for (Player p = 0; p < game.num_players(); ++p) {
    std::map<Payoff, std::vector<ProfileIndex>> by_value;
    const auto& u = game.payoffs(p);
    for (ProfileIndex i = 0; i < u.size(); ++i) by_value[u[i]].push_back(i);
    for (const auto& [value, indices] : by_value) {
      if (indices.size() < 2) continue;
      Violation v;
      v.player = p;
      v.value = value;
      for (ProfileIndex i : indices) v.profiles.push_back(game.ProfileAt(i));
      report.violations.push_back(std::move(v));
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::string DescribeViolation(const Game& game, const Violation& violation) {
  std::ostringstream out;
  out << "tie for player " << game.player_label(violation.player)
      << ": payoff " << violation.value << " at";
  for (const auto& profile : violation.profiles) {
    out << " " << game.ProfileToString(profile);
  }
  return out.str();
}

void RequireNoTies(const Game& game) {
  ValidationReport report = ValidateGame(game);
  if (!report.ok) {
    throw InvalidGameError("game has ties (" +
                           DescribeViolation(game, report.violations.front()) +
                           ")");
  }
}

}  // namespace pte
