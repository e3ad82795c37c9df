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

#ifndef PTE_RANDOM_GAMES_H_
#define PTE_RANDOM_GAMES_H_

#include <cstdint>
#include <vector>

#include "pte/game.h"

namespace pte {

// Each player's payoffs are an independent random permutation of
// {0, ..., |Σ|-1}, so the result never has ties. Pure function of its
// arguments, and identical across standard libraries (the shuffle only uses
// raw std::mt19937_64 output).
Game GenerateRandomGame(std::uint64_t seed,
                        const std::vector<int>& strategy_counts);

// Two-player symmetric game: u_2(a, b) = u_1(b, a).
Game GenerateRandomSymmetricGame(std::uint64_t seed, int num_strategies);

}  // namespace pte

#endif  // PTE_RANDOM_GAMES_H_
