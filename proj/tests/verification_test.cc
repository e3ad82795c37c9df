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

#include "pte/verification.h"

#include <gtest/gtest.h>

#include "pte/formula.h"
#include "pte/random_games.h"
#include "test_games.h"

namespace pte {
namespace {

using testing::G1;
using testing::PrisonersDilemma;

WorldId W(const CanonicalStructure& s, const std::string& literal) {
  return s.Id(ParseWorldLiteral(literal, s.game()));
}

bool HasFailureAt(const CheckResult& r, const std::string& where) {
  for (const auto& c : r.counterexamples) {
    if (c.where.find(where) != std::string::npos) return true;
  }
  return false;
}

TEST(LemmaChecksTest, CanonicalStructuresPass) {
  for (const Game& g : {G1(), PrisonersDilemma(), testing::OneByOne(),
                        GenerateRandomGame(3, {3, 3})}) {
    for (const CheckResult& r :
         RunLemmaChecks(CanonicalStructure::Build(g))) {
      EXPECT_TRUE(r.passed) << r.name;
      EXPECT_TRUE(r.counterexamples.empty()) << r.name;
    }
  }
}

TEST(LemmaChecksTest, CascadingCatchesCorruptedClosestState) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  StructureEditor(s).SetClosestState(W(s, "(B,X)@2"), 0, 0, W(s, "(A,X)@2"));
  const CheckResult r = CheckLemmaCascading(s);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "f((B,X)@2, P1, A)"));
  EXPECT_EQ(r.counterexamples.front().game_digest, GameDigest(G1()));
}

TEST(LemmaChecksTest, OmniscienceCatchesCorruptedClass) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  StructureEditor(s).SetClass(W(s, "(B,Y)@1"), WorldClass::kNormal);
  const CheckResult r = CheckLemmaOmniscience(s);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "(B,Y)@1"));
}

TEST(LemmaChecksTest, RationalityCatchesProfitableDeviation) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  StructureEditor(s).SetClass(W(s, "(A,X)@1"), WorldClass::kNonNormalPossible);
  const CheckResult r = CheckLemmaNecessaryRationality(s);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "(B,X)@2"));
}

TEST(LemmaChecksTest, RationalityCatchesCorruptedValuation) {
  CanonicalStructure s = CanonicalStructure::Build(PrisonersDilemma());
  const WorldId w = W(s, "(C,D)@0");
  ImpossibleAtoms atoms = s.ImpossibleValuation(w);
  atoms.rat = false;
  StructureEditor(s).SetImpossibleAtoms(w, atoms);
  EXPECT_FALSE(CheckLemmaNecessaryRationality(s).passed);
}

TEST(LemmaChecksTest, KnowledgeCatchesExtraEpistemicLink) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  StructureEditor(s).AddEpistemicLink(W(s, "(B,X)@1"), W(s, "(B,Y)@1"));
  const CheckResult r = CheckLemmaNecessaryKnowledge(s);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "(B,X)@1"));
  // □KS at normal worlds also breaks, since (B,X)@1 is accessible.
  EXPECT_TRUE(HasFailureAt(r, "(B,X)@2"));
}

TEST(LemmaChecksTest, DecisionsCatchCorruptedPlayAtom) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  const WorldId w = W(s, "(A,Y)@0");
  ImpossibleAtoms atoms = s.ImpossibleValuation(w);
  atoms.played = s.game().IndexOf(StrategyProfile{1, 0});
  StructureEditor(s).SetImpossibleAtoms(w, atoms);
  const CheckResult r = CheckLemmaAgentDecisions(s);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "(A,Y)@0"));
}

TEST(FullSupportTest, PassesAndReportsOpenReadings) {
  const CanonicalStructure s = CanonicalStructure::Build(G1());
  const CheckResult r = CheckFullSupportRestricted(s, G1());
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.notes.size(), 3u);
  EXPECT_NE(r.notes[1].find("literal coverage"), std::string::npos);
  EXPECT_NE(r.notes[2].find("boxed"), std::string::npos);
  EXPECT_TRUE(CheckFullSupportRestricted(
                  CanonicalStructure::Build(PrisonersDilemma()),
                  PrisonersDilemma())
                  .passed);
}

TEST(FullSupportTest, TruncatedStructureMissesWitnesses) {
  const CanonicalStructure s = CanonicalStructure::Build(G1(), 1);
  const CheckResult r = CheckFullSupportRestricted(s, G1());
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "(B,X) at k=2"));
}

TEST(FullSupportTest, CatchesCorruptedValuation) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  const WorldId w = W(s, "(A,X)@3");
  ImpossibleAtoms atoms = s.ImpossibleValuation(w);
  atoms.knows_strategies = false;
  StructureEditor(s).SetImpossibleAtoms(w, atoms);
  EXPECT_FALSE(CheckFullSupportRestricted(s, G1()).passed);
}

TEST(TheoremTest, LevelSets) {
  const Game g = G1();
  const CanonicalStructure s = CanonicalStructure::Build(g);
  const auto idx = [&](StrategyProfile p) { return g.IndexOf(p); };
  EXPECT_EQ(TheoremSatisfyingProfiles(s, 1).Indices(),
            (std::vector<ProfileIndex>{idx({1, 0}), idx({1, 1})}));
  EXPECT_EQ(TheoremSatisfyingProfiles(s, 2).Indices(),
            (std::vector<ProfileIndex>{idx({1, 0})}));
  EXPECT_TRUE(VerifyTheoremLevel(g, 1).passed);
  EXPECT_TRUE(VerifyTheoremLevel(g, 2).passed);
  EXPECT_TRUE(VerifyTheoremLevel(g, 6).passed);
  EXPECT_TRUE(VerifyTheoremLevel(PrisonersDilemma(), 2).passed);
  EXPECT_THROW(VerifyTheoremLevel(g, 0), std::invalid_argument);
}

TEST(TheoremTest, CatchesCorruptedStructure) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  StructureEditor(s).SetClass(W(s, "(B,Y)@2"), WorldClass::kNormal);
  const CheckResult r =
      VerifyTheoremLevel(s, ComputeOracleLevelSets(G1()), 2);
  EXPECT_FALSE(r.passed);
}

TEST(TheoremTest, Characterization) {
  const CheckResult g1 = VerifyPteCharacterization(G1());
  EXPECT_TRUE(g1.passed);
  ASSERT_FALSE(g1.notes.empty());
  EXPECT_NE(g1.notes[0].find("k=3"), std::string::npos);
  EXPECT_TRUE(VerifyPteCharacterization(PrisonersDilemma()).passed);

  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    const Game g = GenerateRandomGame(seed, {3, 3});
    const CanonicalStructure s = CanonicalStructure::Build(g);
    if (s.trace().outcome.kind != Outcome::Kind::kNoEquilibrium) continue;
    found = true;
    EXPECT_TRUE(VerifyPteCharacterization(s).passed);
    EXPECT_TRUE(
        TheoremSatisfyingProfiles(s, s.trace().fixpoint_level).empty());
  }
  EXPECT_TRUE(found);
}

TEST(EliminationChecksTest, PassOnRandomGames) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const CheckResult& r :
         RunGameChecks(GenerateRandomGame(seed, {2, 2, 2}))) {
      EXPECT_TRUE(r.passed) << r.name << " seed " << seed;
    }
  }
}

TEST(EliminationChecksTest, OracleMismatchIsReported) {
  const Game g = G1();
  const LevelTrace trace = ComputeTrace(g);
  OracleLevelSets oracle = ComputeOracleLevelSets(g);
  oracle.levels[2].insert(StrategyProfile{1, 1});
  const CheckResult r = CheckOracleEquivalence(g, trace, oracle);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(HasFailureAt(r, "S_2"));
}

TEST(EliminationChecksTest, UniquenessSerializesGame) {
  const Game g = G1();
  LevelTrace trace = ComputeTrace(g);
  trace.outcome = Outcome{Outcome::Kind::kMultipleAtFixpoint, {2, 3}};
  const CheckResult r = CheckUniqueness(g, trace);
  ASSERT_FALSE(r.passed);
  EXPECT_NE(r.counterexamples[0].detail.find("\"payoffs\""),
            std::string::npos);
}

TEST(EliminationChecksTest, ParetoAndThresholdFaults) {
  const Game g = PrisonersDilemma();
  LevelTrace trace = ComputeTrace(g);
  trace.outcome = Outcome{Outcome::Kind::kUniquePte, {3}};
  EXPECT_FALSE(CheckParetoOptimality(g, trace).passed);
  trace.thresholds[1].values[0] = 0;
  EXPECT_FALSE(CheckMonotoneThresholds(g, trace).passed);
  trace.nesting_audit.push_back({2, 1});
  EXPECT_FALSE(CheckNesting(g, trace).passed);
  trace.fixpoint_level = 5;
  EXPECT_FALSE(CheckTermination(g, trace).passed);
}

TEST(SweepTest, EmptyRangePassesVacuously) {
  const SweepReport report = RunSweep(5, 5, {{3, 3}});
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.stats.games, 0u);
  EXPECT_EQ(report.checks.size(), 16u);
}

TEST(SweepTest, DeterministicAndPassing) {
  const SweepReport a = RunSweep(0, 20, {{2, 2}, {2, 3}});
  const SweepReport b = RunSweep(0, 20, {{2, 2}, {2, 3}});
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.stats.games, 40u);
  EXPECT_EQ(FormatReportText(a), FormatReportText(b));
  EXPECT_EQ(FormatReportSummaryJson(a), FormatReportSummaryJson(b));
}

TEST(SweepTest, CorruptedFixtureRecordsOneFailure) {
  CanonicalStructure s = CanonicalStructure::Build(G1());
  // Impossible worlds never consult f, so only the level claim notices.
  StructureEditor(s).SetClosestState(W(s, "(A,Y)@3"), 0, 1, W(s, "(B,X)@3"));
  CheckAggregator agg;
  agg.Add(RunLemmaChecks(CanonicalStructure::Build(PrisonersDilemma())));
  agg.Add(RunLemmaChecks(s), "corrupted");
  int failing = 0;
  for (const CheckResult& r : agg.Results()) {
    if (!r.passed) {
      ++failing;
      EXPECT_EQ(r.name, kCheckCascading);
      EXPECT_EQ(r.counterexamples.size(), 1u);
      EXPECT_EQ(r.counterexamples[0].where.rfind("corrupted", 0), 0u);
    }
  }
  EXPECT_EQ(failing, 1);
  EXPECT_FALSE(agg.AllPassed());
}

TEST(SweepTest, Shapes) {
  EXPECT_EQ(ParseShape("2x2x2"), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(ShapeToString({3, 3}), "3x3");
  EXPECT_THROW(ParseShape("3x"), std::invalid_argument);
  EXPECT_THROW(ParseShape("x3"), std::invalid_argument);
  EXPECT_THROW(ParseShape("3x0"), std::invalid_argument);
  EXPECT_THROW(ParseShape("a"), std::invalid_argument);
}

TEST(SweepTest, Hofstadter) {
  const SweepReport r = RunSymmetricSweep(0, 60);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.stats.games, 60u);
  EXPECT_GT(r.stats.unique_pte, 0u);
}

}  // namespace
}  // namespace pte
