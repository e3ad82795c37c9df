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

#ifndef PTE_VERIFICATION_H_
#define PTE_VERIFICATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pte/elimination.h"
#include "pte/game.h"
#include "pte/kripke.h"
#include "pte/oracle.h"

namespace pte {

struct Counterexample {
  std::string game_digest;
  std::string where;  // world, profile or level
  std::string detail;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  // Informational lines that never affect `passed`.
  std::vector<std::string> notes;

  void Fail(const Game& game, std::string where, std::string detail);
  void Note(std::string note);
};

// 16 hex digits of FNV-1a over SerializeGame(game).
std::string GameDigest(const Game& game);

// Check names, as they appear in reports.
inline constexpr char kCheckOracle[] = "oracle_equivalence";
inline constexpr char kCheckNesting[] = "nesting";
inline constexpr char kCheckThresholds[] = "monotone_thresholds";
inline constexpr char kCheckTermination[] = "termination";
inline constexpr char kCheckLevelOne[] = "level1_classic_ir";
inline constexpr char kCheckCascading[] = "lemma_cascading";
inline constexpr char kCheckOmniscience[] = "lemma_omniscience";
inline constexpr char kCheckRationality[] = "lemma_necessary_rationality";
inline constexpr char kCheckKnowledge[] = "lemma_necessary_knowledge";
inline constexpr char kCheckDecisions[] = "lemma_agent_decisions";
inline constexpr char kCheckFullSupport[] = "full_support_restricted";
inline constexpr char kCheckTheorem1[] = "theorem_level1";
inline constexpr char kCheckTheorem2[] = "theorem_levelk";
inline constexpr char kCheckTheorem3[] = "theorem_pte_characterization";
inline constexpr char kCheckPareto[] = "pareto_optimality";
inline constexpr char kCheckUniqueness[] = "uniqueness";
inline constexpr char kCheckHofstadter[] = "hofstadter";

// Structure checks. Each examines every world of the (possibly truncated)
// structure.
CheckResult CheckLemmaCascading(const CanonicalStructure& structure);
CheckResult CheckLemmaOmniscience(const CanonicalStructure& structure);
CheckResult CheckLemmaNecessaryRationality(const CanonicalStructure& structure);
CheckResult CheckLemmaNecessaryKnowledge(const CanonicalStructure& structure);
CheckResult CheckLemmaAgentDecisions(const CanonicalStructure& structure);

// Only the fragment that can be checked on the canonical structure:
//  (a) RAT ∧ KS everywhere, □(RAT ∧ KS) on Ξ, profile coverage by level-0
//      worlds of Ω and by Λ-worlds for S_1;
//  (b) for k = 1..fixpoint+1 and every s in the oracle S_k, some w in Λ
//      with play(s) ∧ F ∧ OMN(k), F = RAT ∧ KS at k = 1, □(RAT ∧ KS) above.
// The literal "every profile has a Λ-world" clause and the □-at-level-1
// reading are evaluated too and reported as notes.
CheckResult CheckFullSupportRestricted(const CanonicalStructure& structure,
                                       const Game& game);

// The set of profiles realized at Λ-worlds satisfying play(σ(w)) ∧ F_k,
// with F_1 = RAT ∧ KS ∧ OMN(1) restricted to non-normal worlds and
// F_k = □RAT ∧ □KS ∧ OMN(k) for k >= 2.
ProfileSet TheoremSatisfyingProfiles(const CanonicalStructure& structure,
                                     int k);

// Compares TheoremSatisfyingProfiles against the oracle S_k. The game-only
// overload builds a structure tall enough for k.
CheckResult VerifyTheoremLevel(const Game& game, int k);
CheckResult VerifyTheoremLevel(const CanonicalStructure& structure,
                               const OracleLevelSets& oracle, int k);

// ComputePte against the intersection of the theorem sets for
// k = 1..fixpoint+1. S_k is constant past the fixpoint, so that range
// covers every k.
CheckResult VerifyPteCharacterization(const Game& game);
CheckResult VerifyPteCharacterization(const CanonicalStructure& structure);

// Elimination properties.
CheckResult CheckOracleEquivalence(const Game& game,
                                   const LevelTrace& trace,
                                   const OracleLevelSets& oracle);
CheckResult CheckNesting(const Game& game, const LevelTrace& trace);
CheckResult CheckMonotoneThresholds(const Game& game, const LevelTrace& trace);
// Fixpoint reached within |Σ| elimination rounds.
CheckResult CheckTermination(const Game& game, const LevelTrace& trace);
// S_1 equals the profiles giving each player at least its classic
// maximin over the whole game.
CheckResult CheckLevelOneClassicIr(const Game& game, const LevelTrace& trace);
CheckResult CheckParetoOptimality(const Game& game, const LevelTrace& trace);
// A MultipleAtFixpoint outcome fails and carries the serialized game.
CheckResult CheckUniqueness(const Game& game, const LevelTrace& trace);
// Symmetric games only: a unique PTE equals HofstadterProfile.
CheckResult CheckHofstadter(const Game& game);

// The five lemma checks plus full support, in report order.
std::vector<CheckResult> RunLemmaChecks(const CanonicalStructure& structure);

// Every per-game check, in report order.
std::vector<CheckResult> RunGameChecks(const Game& game);

// Merges per-game results by check name. Check order is fixed by the first
// Add; counterexamples keep insertion order.
class CheckAggregator {
 public:
  explicit CheckAggregator(std::vector<std::string> names = {});

  void Add(const std::vector<CheckResult>& results,
           const std::string& label = "");
  std::vector<CheckResult> Results() const;
  bool AllPassed() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, CheckResult> by_name_;
};

struct SweepStats {
  std::size_t games = 0;
  std::size_t unique_pte = 0;
  std::size_t no_equilibrium = 0;
  std::size_t multiple = 0;
  int max_fixpoint_level = 0;
  std::size_t worlds_checked = 0;
  // First (shape, seed) whose outcome is NONE.
  std::optional<std::pair<std::vector<int>, std::uint64_t>> first_no_equilibrium;
};

struct SweepReport {
  std::vector<CheckResult> checks;
  SweepStats stats;
  bool passed() const;
};

std::string ShapeToString(const std::vector<int>& shape);
// "3x3" -> {3, 3}. Throws std::invalid_argument.
std::vector<int> ParseShape(const std::string& text);

// Seeds in [seed_begin, seed_end) for every shape, shape-major. An empty
// range passes vacuously.
SweepReport RunSweep(std::uint64_t seed_begin, std::uint64_t seed_end,
                     const std::vector<std::vector<int>>& shapes);

// Symmetric two-player games with n = 2 + seed % 3 strategies.
SweepReport RunSymmetricSweep(std::uint64_t seed_begin,
                              std::uint64_t seed_end);

// One line per check ("PASS name" / "FAIL name (n counterexamples)") with
// indented counterexamples and notes.
std::string FormatReportText(const SweepReport& report);
// Single-line JSON summary.
std::string FormatReportSummaryJson(const SweepReport& report);

}  // namespace pte

#endif  // PTE_VERIFICATION_H_
