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

#ifndef PTE_TESTS_TEST_GAMES_H_
#define PTE_TESTS_TEST_GAMES_H_

#include "pte/game.h"

namespace pte::testing {

// P1 in {A,B}, P2 in {X,Y}. Two nontrivial elimination rounds.
inline Game G1() {
  return Game({"P1", "P2"}, {{"A", "B"}, {"X", "Y"}},
              {{3, 0, 1, 2}, {0, 3, 2, 1}});
}

inline Game PrisonersDilemma() {
  return Game({"P1", "P2"}, {{"C", "D"}, {"C", "D"}},
              {{2, 0, 3, 1}, {2, 3, 0, 1}});
}

inline Game OneByOne() {
  return Game({"P1", "P2"}, {{"S"}, {"T"}}, {{0}, {0}});
}

}  // namespace pte::testing

#endif  // PTE_TESTS_TEST_GAMES_H_
