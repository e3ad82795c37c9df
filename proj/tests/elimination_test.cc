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

#include <gtest/gtest.h>

#include "pte/oracle.h"
#include "pte/random_games.h"
#include "test_games.h"

namespace pte {
namespace {

using testing::G1;
using testing::PrisonersDilemma;

std::vector<ProfileIndex> Idx(const Game& g,
                              std::vector<StrategyProfile> profiles) {
  std::vector<ProfileIndex> out;
  for (const auto& p : profiles) out.push_back(g.IndexOf(p));
  return out;
}

// Expected values below come from tests/oracle/brute_force.py.

TEST(EliminationTest, G1Trace) {
  const Game g = G1();
  const LevelTrace t = ComputeTrace(g);
  EXPECT_EQ(t.SetAt(0).size(), 4u);
  EXPECT_EQ(t.SetAt(1).Indices(), Idx(g, {{1, 0}, {1, 1}}));
  EXPECT_EQ(t.SetAt(2).Indices(), Idx(g, {{1, 0}}));
  EXPECT_EQ(t.SetAt(3).Indices(), Idx(g, {{1, 0}}));
  ASSERT_GE(t.thresholds.size(), 2u);
  EXPECT_EQ(t.thresholds[0].values, (std::vector<Threshold>{1, 1}));
  EXPECT_EQ(t.thresholds[1].values, (std::vector<Threshold>{1, 2}));
  EXPECT_EQ(t.fixpoint_level, 2);
  EXPECT_EQ(t.outcome.kind, Outcome::Kind::kUniquePte);
  EXPECT_EQ(OutcomeToString(g, t.outcome), "PTE (B,X)");
  EXPECT_TRUE(t.nesting_audit.empty());
}

TEST(EliminationTest, PrisonersDilemma) {
  const Game g = PrisonersDilemma();
  const LevelTrace t = ComputeTrace(g);
  EXPECT_EQ(t.SetAt(1).Indices(), Idx(g, {{0, 0}, {1, 1}}));
  EXPECT_EQ(t.SetAt(2).Indices(), Idx(g, {{0, 0}}));
  EXPECT_EQ(t.thresholds[0].values, (std::vector<Threshold>{1, 1}));
  EXPECT_EQ(t.thresholds[1].values, (std::vector<Threshold>{2, 2}));
  EXPECT_EQ(OutcomeToString(g, t.outcome), "PTE (C,C)");
  EXPECT_EQ(PureNash(g), Idx(g, {{1, 1}}));
}

TEST(EliminationTest, OneByOne) {
  const Game g = testing::OneByOne();
  const LevelTrace t = ComputeTrace(g);
  EXPECT_EQ(t.fixpoint_level, 1);
  EXPECT_EQ(t.outcome.kind, Outcome::Kind::kUniquePte);
  EXPECT_EQ(t.SetAt(5).size(), 1u);
}

TEST(EliminationTest, ThresholdDivergesOnEmptySet) {
  const Game g = G1();
  EXPECT_EQ(MaximinThreshold(g, ProfileSet(4), 0), std::nullopt);
  EXPECT_EQ(MaximinThreshold(g, ProfileSet::All(4), 0), 1);
  EXPECT_EQ(MaximinThreshold(g, ProfileSet::All(4), 1), 1);
}

TEST(EliminationTest, RejectsTies) {
  const Game ties({"P1", "P2"}, {{"A", "B"}, {"X", "Y"}},
                  {{1, 1, 0, 2}, {0, 1, 2, 3}});
  EXPECT_THROW(ComputeTrace(ties), InvalidGameError);
}

TEST(EliminationTest, LevelKIndividualRationality) {
  const Game g = G1();
  EXPECT_TRUE(IsLevelKIndividuallyRational(g, StrategyProfile{0, 1}, 0));
  EXPECT_FALSE(IsLevelKIndividuallyRational(g, StrategyProfile{0, 1}, 1));
  EXPECT_TRUE(IsLevelKIndividuallyRational(g, StrategyProfile{1, 1}, 1));
  EXPECT_FALSE(IsLevelKIndividuallyRational(g, StrategyProfile{1, 1}, 2));
  EXPECT_TRUE(IsLevelKIndividuallyRational(g, StrategyProfile{1, 0}, 9));
}

TEST(EliminationTest, NoEquilibriumGameExists) {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    const Game g = GenerateRandomGame(seed, {3, 3});
    const LevelTrace t = ComputeTrace(g);
    if (t.outcome.kind != Outcome::Kind::kNoEquilibrium) continue;
    found = true;
    EXPECT_TRUE(t.SetAt(t.fixpoint_level).empty());
    EXPECT_EQ(OutcomeToString(g, t.outcome), "NONE");
    const LevelSet empty{t.fixpoint_level, ProfileSet(g.num_profiles())};
    for (const Threshold& v : ComputeThresholds(g, empty).values) {
      EXPECT_FALSE(v.has_value());
    }
  }
  EXPECT_TRUE(found);
}

TEST(EliminationTest, ParetoAndComparison) {
  const Game g = PrisonersDilemma();
  EXPECT_TRUE(IsParetoOptimal(g, StrategyProfile{0, 0}));
  EXPECT_FALSE(IsParetoOptimal(g, StrategyProfile{1, 1}));
  EXPECT_EQ(ParetoOptimalSet(g), Idx(g, {{0, 0}, {0, 1}, {1, 0}}));
  const ComparisonReport r = Compare(g);
  EXPECT_EQ(r.individually_rational, Idx(g, {{0, 0}, {1, 1}}));
  ASSERT_TRUE(r.hofstadter.has_value());
  EXPECT_EQ(*r.hofstadter, (StrategyProfile{0, 0}));
  EXPECT_FALSE(Compare(G1()).hofstadter.has_value());
}

TEST(EliminationTest, Hofstadter) {
  EXPECT_THROW(HofstadterProfile(G1()), InvalidGameError);
  const Game one({"P1", "P2"}, {{"S"}, {"S"}}, {{0}, {0}});
  EXPECT_EQ(HofstadterProfile(one), (StrategyProfile{0, 0}));

  const Game g = GenerateRandomSymmetricGame(11, 3);
  int best = 0;
  for (int s = 1; s < 3; ++s) {
    if (g.payoff(StrategyProfile{s, s}, 0) >
        g.payoff(StrategyProfile{best, best}, 0)) {
      best = s;
    }
  }
  EXPECT_EQ(HofstadterProfile(g), (StrategyProfile{best, best}));
}

TEST(OracleTest, MatchesFrozenValues) {
  const Game g = G1();
  const OracleLevelSets o = ComputeOracleLevelSets(g);
  EXPECT_EQ(o.fixpoint_level, 2);
  EXPECT_EQ(o.SetAt(1),
            (std::set<StrategyProfile>{{1, 0}, {1, 1}}));
  EXPECT_EQ(o.SetAt(2), (std::set<StrategyProfile>{{1, 0}}));
  const OracleLevelSets one = ComputeOracleLevelSets(testing::OneByOne());
  EXPECT_EQ(one.SetAt(0), one.SetAt(4));
  EXPECT_EQ(one.SetAt(4).size(), 1u);
  const OracleLevelSets pd = ComputeOracleLevelSets(PrisonersDilemma());
  EXPECT_EQ(pd.SetAt(1), (std::set<StrategyProfile>{{0, 0}, {1, 1}}));
  EXPECT_EQ(pd.SetAt(2), (std::set<StrategyProfile>{{0, 0}}));
}

TEST(OracleTest, AgreesWithSolverOnRandomGames) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Game g = GenerateRandomGame(seed, {3, 2, 2});
    const LevelTrace t = ComputeTrace(g);
    const OracleLevelSets o = ComputeOracleLevelSets(g);
    ASSERT_EQ(t.fixpoint_level, o.fixpoint_level) << "seed " << seed;
    for (int k = 0; k <= t.fixpoint_level + 1; ++k) {
      std::set<StrategyProfile> solver;
      for (ProfileIndex p : t.SetAt(k).Indices()) solver.insert(g.ProfileAt(p));
      EXPECT_EQ(solver, o.SetAt(k)) << "seed " << seed << " k " << k;
    }
  }
}

}  // namespace
}  // namespace pte
