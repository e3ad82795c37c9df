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

#ifndef PTE_GAME_IO_H_
#define PTE_GAME_IO_H_

#include <string>

#include "pte/game.h"

namespace pte {

// JSON game files:
//
//   {
//     "players": ["P1", "P2"],
//     "strategies": [["A", "B"], ["X", "Y"]],
//     "payoffs": [[3, 0, 1, 2], [0, 3, 2, 1]]
//   }
//
// Each payoff array lists one player's payoffs in EnumerateProfiles() order.

// A loaded game together with its no-ties report. Loading succeeds even
// when the game has ties.
struct ParsedGame {
  Game game;
  ValidationReport validation;
};

// Throws ParseError on malformed JSON, missing keys, wrong types or
// inconsistent dimensions.
ParsedGame ParseGame(const std::string& text);

std::string SerializeGame(const Game& game);

// Reads and parses a file. Throws Error if the file cannot be read.
ParsedGame LoadGameFile(const std::string& path);

}  // namespace pte

#endif  // PTE_GAME_IO_H_
