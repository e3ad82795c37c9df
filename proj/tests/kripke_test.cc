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

#include "pte/kripke.h"

#include <gtest/gtest.h>

#include "pte/random_games.h"
#include "test_games.h"

namespace pte {
namespace {

using testing::G1;

class G1StructureTest : public ::testing::Test {
 protected:
  G1StructureTest() : s_(CanonicalStructure::Build(G1())) {}

  WorldId W(int a, int b, int level) const {
    return s_.Id(s_.game().IndexOf(StrategyProfile{a, b}), level);
  }

  CanonicalStructure s_;
};

TEST_F(G1StructureTest, Grid) {
  EXPECT_EQ(s_.max_level(), 4);
  EXPECT_EQ(s_.num_worlds(), 20u);
  const WorldId w = W(1, 0, 3);
  EXPECT_EQ(s_.LevelOf(w), 3);
  EXPECT_EQ(s_.WorldAt(w).profile, (StrategyProfile{1, 0}));
  EXPECT_EQ(s_.WorldToString(w), "(B,X)@3");
  EXPECT_THROW(s_.Id(0, 5), std::out_of_range);
}

TEST_F(G1StructureTest, Classes) {
  EXPECT_EQ(s_.ClassOf(W(1, 0, 2)), WorldClass::kNormal);
  EXPECT_EQ(s_.ClassOf(W(1, 1, 1)), WorldClass::kNonNormalPossible);
  EXPECT_EQ(s_.ClassOf(W(1, 0, 1)), WorldClass::kNonNormalPossible);
  EXPECT_EQ(s_.ClassOf(W(1, 1, 2)), WorldClass::kImpossible);
  EXPECT_EQ(s_.ClassOf(W(0, 0, 1)), WorldClass::kImpossible);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_EQ(s_.ClassOf(W(a, b, 0)), WorldClass::kImpossible);
    }
  }
}

// Frozen from tests/oracle/brute_force.py.
TEST_F(G1StructureTest, ClosestState) {
  EXPECT_EQ(s_.ClosestState(W(1, 0, 2), 0, 1), W(1, 0, 2));
  EXPECT_EQ(s_.ClosestState(W(1, 0, 2), 0, 0), W(0, 0, 1));
  EXPECT_EQ(s_.ClosestState(W(1, 1, 1), 1, 0), W(0, 0, 0));
  EXPECT_EQ(s_.ClosestState(W(1, 0, 0), 1, 1), W(1, 1, 0));
  EXPECT_EQ(s_.ClosestState(W(1, 0, 3), 1, 1), W(1, 1, 2));
}

TEST_F(G1StructureTest, Relations) {
  const WorldId normal = W(1, 0, 2);
  const WorldId nonnormal = W(1, 1, 1);
  const WorldId impossible = W(0, 0, 0);
  EXPECT_TRUE(s_.LogicallyAccessible(normal, nonnormal, 0));
  EXPECT_FALSE(s_.LogicallyAccessible(normal, impossible, 0));
  EXPECT_TRUE(s_.LogicallyAccessible(nonnormal, impossible, 1));
  EXPECT_TRUE(s_.LogicallyAccessible(impossible, impossible, 1));
  EXPECT_TRUE(s_.EpistemicallyAccessible(normal, normal, 0));
  EXPECT_FALSE(s_.EpistemicallyAccessible(normal, nonnormal, 0));
  EXPECT_EQ(s_.EpistemicSuccessors(normal, 1), std::vector<WorldId>{normal});
}

TEST_F(G1StructureTest, ImpossibleValuation) {
  const ImpossibleAtoms& atoms = s_.ImpossibleValuation(W(0, 1, 3));
  EXPECT_TRUE(atoms.rat);
  EXPECT_TRUE(atoms.knows_strategies);
  EXPECT_EQ(atoms.played, s_.game().IndexOf(StrategyProfile{0, 1}));
  EXPECT_EQ(atoms.omniscience_level, 3);
  EXPECT_THROW(s_.ImpossibleValuation(W(1, 0, 2)), std::logic_error);
}

TEST_F(G1StructureTest, EditorCorrupts) {
  StructureEditor editor(s_);
  editor.SetClass(W(1, 0, 2), WorldClass::kImpossible);
  EXPECT_EQ(s_.ImpossibleValuation(W(1, 0, 2)).omniscience_level, 2);
  editor.SetClosestState(W(1, 0, 2), 0, 0, W(0, 0, 2));
  EXPECT_EQ(s_.ClosestState(W(1, 0, 2), 0, 0), W(0, 0, 2));
  editor.AddEpistemicLink(W(1, 0, 3), W(1, 0, 2));
  EXPECT_TRUE(s_.EpistemicallyAccessible(W(1, 0, 3), W(1, 0, 2), 0));
}

TEST_F(G1StructureTest, DotExport) {
  const std::string dot = ExportStructureDot(s_);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"(B,X),2,NORMAL\"]"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"(B,Y),1,NONNORMAL_POSSIBLE\"]"),
            std::string::npos);
  EXPECT_NE(dot.find("f:P1→A"), std::string::npos);
  // 20 worlds, each with one deviation per player.
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos;
       ++pos) {
    ++edges;
  }
  EXPECT_EQ(edges, 40u);
}

TEST(KripkeTest, MaxLevelOption) {
  EXPECT_EQ(CanonicalStructure::Build(G1(), 0).num_worlds(), 4u);
  EXPECT_THROW(CanonicalStructure::Build(G1(), -1), std::invalid_argument);
  const Game ties({"P1", "P2"}, {{"A", "B"}, {"X", "Y"}},
                  {{1, 1, 0, 2}, {0, 1, 2, 3}});
  EXPECT_THROW(CanonicalStructure::Build(ties), InvalidGameError);
}

TEST(KripkeTest, DeviatorAlwaysPlaysTarget) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CanonicalStructure s =
        CanonicalStructure::Build(GenerateRandomGame(seed, {3, 2, 2}));
    for (WorldId w = 0; w < s.num_worlds(); ++w) {
      for (Player i = 0; i < 3; ++i) {
        for (int t = 0; t < s.game().num_strategies(i); ++t) {
          ASSERT_EQ(s.StrategyOf(s.ClosestState(w, i, t), i), t);
        }
      }
    }
  }
}

}  // namespace
}  // namespace pte
