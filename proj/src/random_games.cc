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

#include "pte/random_games.h"

#include <numeric>
#include <random>
#include <utility>

namespace pte {
namespace {

// Uniform draw in [0, bound) by rejection; std::uniform_int_distribution is
// implementation-defined and would make seeds non-portable.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() -
                              std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<Payoff> RandomPermutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Payoff> values(n);
  std::iota(values.begin(), values.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(values[i - 1], values[Below(rng, i)]);
  }
  return values;
}

}  // namespace

Game GenerateRandomGame(std::uint64_t seed,
                        const std::vector<int>& strategy_counts) {
  if (strategy_counts.empty()) {
    throw InvalidGameError("a game needs at least one player");
  }
  std::size_t num_profiles = 1;
  for (int c : strategy_counts) {
    if (c < 1) throw InvalidGameError("strategy counts must be >= 1");
    num_profiles *= static_cast<std::size_t>(c);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Payoff>> payoffs;
  for (std::size_t p = 0; p < strategy_counts.size(); ++p) {
    payoffs.push_back(RandomPermutation(rng, num_profiles));
  }
  return Game::FromCounts(strategy_counts, std::move(payoffs));
}

Game GenerateRandomSymmetricGame(std::uint64_t seed, int num_strategies) {
  if (num_strategies < 1) {
    throw InvalidGameError("strategy counts must be >= 1");
  }
  const std::size_t n = static_cast<std::size_t>(num_strategies);
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Payoff> u1 = RandomPermutation(rng, n * n);
    std::vector<Payoff> u2(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) u2[a * n + b] = u1[b * n + a];
    }
    Game game = Game::FromCounts({num_strategies, num_strategies},
                                 {std::move(u1), std::move(u2)});
    // u_2 is a rearrangement of u_1, so this holds on the first draw.
    if (ValidateGame(game).ok) return game;
  }
}

}  // namespace pte
