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

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pte/formula.h"
#include "pte/game_io.h"
#include "pte/model_checker.h"
#include "pte/random_games.h"

namespace pte {
namespace {

std::string Deviation(const CanonicalStructure& s, WorldId w, Player i,
                      int t) {
  const Game& game = s.game();
  return "f(" + s.WorldToString(w) + ", " + game.player_label(i) + ", " +
         game.strategy_label(i, t) + ")";
}

std::set<StrategyProfile> ToProfiles(const Game& game, const ProfileSet& set) {
  std::set<StrategyProfile> out;
  for (ProfileIndex p : set.Indices()) out.insert(game.ProfileAt(p));
  return out;
}

std::string ToString(const Game& game, const std::set<StrategyProfile>& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : set) {
    if (!first) out += ",";
    first = false;
    out += game.ProfileToString(p);
  }
  return out + "}";
}

std::string ThresholdsToString(const MaximinThresholds& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i) out += ",";
    out += t.values[i] ? std::to_string(*t.values[i]) : "DIVERGED";
  }
  return out + ")";
}

bool AllPlayersCanDeviate(const Game& game) {
  for (Player p = 0; p < game.num_players(); ++p) {
    if (game.num_strategies(p) < 2) return false;
  }
  return true;
}

Formula RatAndKs() {
  return Formula::And(Formula::Rat(), Formula::KnowsStrategies());
}

}  // namespace

void CheckResult::Fail(const Game& game, std::string where,
                       std::string detail) {
  passed = false;
  counterexamples.push_back(
      Counterexample{GameDigest(game), std::move(where), std::move(detail)});
}

void CheckResult::Note(std::string note) { notes.push_back(std::move(note)); }

std::string GameDigest(const Game& game) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : SerializeGame(game)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

CheckResult CheckLemmaCascading(const CanonicalStructure& s) {
  CheckResult result{kCheckCascading};
  const Game& game = s.game();
  EvalContext ctx(s);
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    const int level = s.LevelOf(w);
    for (Player i = 0; i < game.num_players(); ++i) {
      for (int t = 0; t < game.num_strategies(i); ++t) {
        const WorldId target = s.ClosestState(w, i, t);
        if (s.StrategyOf(target, i) != t) {
          result.Fail(game, Deviation(s, w, i, t),
                      "lands at " + s.WorldToString(target) +
                          " where the deviator does not play the strategy");
        }
        if (level == 0 || t == s.StrategyOf(w, i)) continue;
        if (s.LevelOf(target) != level - 1) {
          result.Fail(game, Deviation(s, w, i, t),
                      "level " + std::to_string(s.LevelOf(target)) +
                          ", expected " + std::to_string(level - 1));
        }
        if (!s.IsLogicallyPossible(w)) continue;
        bool expected = false;
        for (ProfileIndex q : s.trace().SetAt(level - 1).Indices()) {
          if (game.ProfileAt(q)[i] == t) expected = true;
        }
        const bool actual =
            ctx.Eval(w, Formula::DiamondC(Formula::PlayAgent({i, t})));
        if (actual != expected) {
          result.Fail(game, Deviation(s, w, i, t),
                      std::string("dia_c play_i is ") +
                          (actual ? "true" : "false") + " but S_" +
                          std::to_string(level - 1) +
                          (expected ? " has" : " has no") +
                          " profile with that strategy");
        }
      }
    }
  }
  return result;
}

CheckResult CheckLemmaOmniscience(const CanonicalStructure& s) {
  CheckResult result{kCheckOmniscience};
  const Game& game = s.game();
  EvalContext ctx(s);
  const bool strict_shortcut = AllPlayersCanDeviate(game);
  std::size_t shortcut_mismatches = 0;
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    const int level = s.LevelOf(w);
    if (level < 1) continue;
    if (!ctx.EvalOmniscience(w, level)) {
      result.Fail(game, s.WorldToString(w),
                  "OMN^" + std::to_string(level) + " does not hold");
    }
    // Cross-check: OMN^k holds exactly at level k.
    for (int k = 1; k <= s.max_level(); ++k) {
      if (k == level || !ctx.EvalOmniscience(w, k)) continue;
      if (strict_shortcut) {
        result.Fail(game, s.WorldToString(w),
                    "OMN^" + std::to_string(k) + " holds off its level");
      } else {
        ++shortcut_mismatches;
      }
    }
  }
  if (shortcut_mismatches > 0) {
    result.Note(std::to_string(shortcut_mismatches) +
                " (world, k) pairs satisfy OMN^k off level k; some player has"
                " a single strategy, so deviations are vacuous");
  }
  return result;
}

CheckResult CheckLemmaNecessaryRationality(const CanonicalStructure& s) {
  CheckResult result{kCheckRationality};
  EvalContext ctx(s);
  const Formula box_rat = Formula::Box(Formula::Rat());
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    if (!ctx.EvalRat(w)) {
      result.Fail(s.game(), s.WorldToString(w), "RAT fails");
    }
    if (s.IsNormal(w) && !ctx.Eval(w, box_rat)) {
      result.Fail(s.game(), s.WorldToString(w), "box(RAT) fails");
    }
  }
  return result;
}

CheckResult CheckLemmaNecessaryKnowledge(const CanonicalStructure& s) {
  CheckResult result{kCheckKnowledge};
  EvalContext ctx(s);
  const Formula box_ks = Formula::Box(Formula::KnowsStrategies());
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    if (!ctx.EvalKnowledge(w)) {
      result.Fail(s.game(), s.WorldToString(w), "KS fails");
    }
    if (s.IsNormal(w) && !ctx.Eval(w, box_ks)) {
      result.Fail(s.game(), s.WorldToString(w), "box(KS) fails");
    }
  }
  return result;
}

CheckResult CheckLemmaAgentDecisions(const CanonicalStructure& s) {
  CheckResult result{kCheckDecisions};
  const Game& game = s.game();
  EvalContext ctx(s);
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    const StrategyProfile profile = game.ProfileAt(s.ProfileOf(w));
    if (!ctx.Eval(w, Formula::Play(profile))) {
      result.Fail(game, s.WorldToString(w), "play(σ(w)) fails");
    }
    for (Player i = 0; i < game.num_players(); ++i) {
      if (!ctx.Eval(w, Formula::PlayAgent({i, profile[i]}))) {
        result.Fail(game, s.WorldToString(w),
                    "play_" + std::to_string(i + 1) + "(σ_i(w)) fails");
      }
    }
  }
  return result;
}

CheckResult CheckFullSupportRestricted(const CanonicalStructure& s,
                                       const Game& game) {
  CheckResult result{kCheckFullSupport};
  result.Note(
      "restricted check: the canonical structure only, not every structure");
  EvalContext ctx(s);
  const Formula base = RatAndKs();
  const Formula boxed = Formula::Box(base);

  // Level-0 conditions.
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    if (!ctx.Eval(w, base)) {
      result.Fail(game, s.WorldToString(w), "RAT & KS fails");
    }
    if (s.IsNormal(w) && !ctx.Eval(w, boxed)) {
      result.Fail(game, s.WorldToString(w), "box(RAT & KS) fails");
    }
  }
  const OracleLevelSets oracle = ComputeOracleLevelSets(game);
  std::size_t uncovered_by_lambda = 0;
  for (ProfileIndex p = 0; p < game.num_profiles(); ++p) {
    const Formula play = Formula::Play(game.ProfileAt(p));
    bool at_level0 = false;
    for (WorldId w = 0; w < s.num_worlds() && !at_level0; ++w) {
      at_level0 = s.LevelOf(w) == 0 && ctx.Eval(w, play);
    }
    if (!at_level0) {
      result.Fail(game, game.ProfileToString(p), "no level-0 world plays it");
    }
    bool in_lambda = false;
    for (WorldId w = 0; w < s.num_worlds() && !in_lambda; ++w) {
      in_lambda = s.IsLogicallyPossible(w) && ctx.Eval(w, play);
    }
    if (!in_lambda) ++uncovered_by_lambda;
    if (!in_lambda && oracle.SetAt(1).contains(game.ProfileAt(p))) {
      result.Fail(game, game.ProfileToString(p),
                  "in S_1 but no logically possible world plays it");
    }
  }
  if (uncovered_by_lambda > 0) {
    result.Note(
        "literal coverage of Σ by Λ fails for profiles outside S_1; coverage"
        " is checked against Ω at level 0 and against Λ for S_1 instead");
  }

  // Witnesses.
  const int top = oracle.fixpoint_level + 1;
  bool boxed_reading_differs = false;
  for (int k = 1; k <= top; ++k) {
    const Formula omn = Formula::Omniscience(k);
    const Formula literal = Formula::And(k == 1 ? base : boxed, omn);
    const Formula alternative = Formula::And(boxed, omn);
    for (const StrategyProfile& profile : oracle.SetAt(k)) {
      const Formula play = Formula::Play(profile);
      bool found = false;
      bool found_alternative = false;
      for (WorldId w = 0; w < s.num_worlds(); ++w) {
        if (!s.IsLogicallyPossible(w) || !ctx.Eval(w, play)) continue;
        found = found || ctx.Eval(w, literal);
        found_alternative = found_alternative || ctx.Eval(w, alternative);
      }
      if (!found) {
        result.Fail(game,
                    game.ProfileToString(profile) + " at k=" +
                        std::to_string(k),
                    "no witness world in Λ");
      }
      if (k == 1 && found != found_alternative) boxed_reading_differs = true;
    }
  }
  if (boxed_reading_differs) {
    result.Note(
        "k=1 witnesses exist under the literal reading but not when the"
        " formula is boxed");
  }
  return result;
}

ProfileSet TheoremSatisfyingProfiles(const CanonicalStructure& s, int k) {
  const Game& game = s.game();
  const Formula f =
      k == 1 ? Formula::And(RatAndKs(), Formula::Omniscience(1))
             : Formula::And(Formula::And(Formula::Box(Formula::Rat()),
                                         Formula::Box(
                                             Formula::KnowsStrategies())),
                            Formula::Omniscience(k));
  EvalContext ctx(s);
  ProfileSet out(game.num_profiles());
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    if (!s.IsLogicallyPossible(w)) continue;
    if (k == 1 && s.IsNormal(w)) continue;
    const ProfileIndex p = s.ProfileOf(w);
    if (ctx.Eval(w, Formula::And(Formula::Play(game.ProfileAt(p)), f))) {
      out.Insert(p);
    }
  }
  return out;
}

CheckResult VerifyTheoremLevel(const CanonicalStructure& s,
                               const OracleLevelSets& oracle, int k) {
  if (k < 1) throw std::invalid_argument("theorem level must be >= 1");
  CheckResult result{k == 1 ? kCheckTheorem1 : kCheckTheorem2};
  const Game& game = s.game();
  const std::set<StrategyProfile> lhs = oracle.SetAt(k);
  const std::set<StrategyProfile> rhs =
      ToProfiles(game, TheoremSatisfyingProfiles(s, k));
  if (lhs != rhs) {
    result.Fail(game, "k=" + std::to_string(k),
                "oracle S_k=" + ToString(game, lhs) +
                    " but the formula holds for " + ToString(game, rhs));
  }
  return result;
}

CheckResult VerifyTheoremLevel(const Game& game, int k) {
  const LevelTrace trace = ComputeTrace(game);
  const CanonicalStructure s = CanonicalStructure::Build(
      game, std::max(trace.fixpoint_level + 2, k + 1));
  return VerifyTheoremLevel(s, ComputeOracleLevelSets(game), k);
}

CheckResult VerifyPteCharacterization(const CanonicalStructure& s) {
  CheckResult result{kCheckTheorem3};
  const Game& game = s.game();
  const LevelTrace& trace = s.trace();
  const int top = trace.fixpoint_level + 1;
  ProfileSet meet = ProfileSet::All(game.num_profiles());
  for (int k = 1; k <= top; ++k) {
    const ProfileSet level = TheoremSatisfyingProfiles(s, k);
    ProfileSet next(game.num_profiles());
    for (ProfileIndex p : meet.Indices()) {
      if (level.Contains(p)) next.Insert(p);
    }
    meet = std::move(next);
  }
  const Outcome& outcome = trace.outcome;
  ProfileSet expected(game.num_profiles());
  if (outcome.kind != Outcome::Kind::kNoEquilibrium) {
    for (ProfileIndex p : outcome.profiles) expected.Insert(p);
  }
  if (meet != expected) {
    result.Fail(game, "k=1.." + std::to_string(top),
                "solver says " + OutcomeToString(game, outcome) +
                    " but the intersection is " +
                    ProfileSetToString(game, meet.Indices()));
  }
  result.Note("certified through k=" + std::to_string(top) +
              "; S_k is constant from the fixpoint on");
  return result;
}

CheckResult VerifyPteCharacterization(const Game& game) {
  return VerifyPteCharacterization(CanonicalStructure::Build(game));
}

CheckResult CheckOracleEquivalence(const Game& game, const LevelTrace& trace,
                                   const OracleLevelSets& oracle) {
  CheckResult result{kCheckOracle};
  if (trace.fixpoint_level != oracle.fixpoint_level) {
    result.Fail(game, "fixpoint",
                "solver " + std::to_string(trace.fixpoint_level) +
                    ", oracle " + std::to_string(oracle.fixpoint_level));
  }
  const int top = std::max(trace.fixpoint_level, oracle.fixpoint_level) + 1;
  for (int k = 0; k <= top; ++k) {
    const auto solver = ToProfiles(game, trace.SetAt(k));
    if (solver != oracle.SetAt(k)) {
      result.Fail(game, "S_" + std::to_string(k),
                  "solver " + ToString(game, solver) + ", oracle " +
                      ToString(game, oracle.SetAt(k)));
    }
  }
  return result;
}

CheckResult CheckNesting(const Game& game, const LevelTrace& trace) {
  CheckResult result{kCheckNesting};
  for (std::size_t k = 1; k < trace.levels.size(); ++k) {
    if (!trace.levels[k].members.IsSubsetOf(trace.levels[k - 1].members)) {
      result.Fail(game, "S_" + std::to_string(k), "not inside S_{k-1}");
    }
  }
  for (const NestingAuditEntry& e : trace.nesting_audit) {
    result.Fail(game, "S_" + std::to_string(e.level),
                game.ProfileToString(e.profile) +
                    " passes the threshold test without being in S_{k-1}");
  }
  return result;
}

CheckResult CheckMonotoneThresholds(const Game& game, const LevelTrace& trace) {
  CheckResult result{kCheckThresholds};
  for (std::size_t k = 1; k < trace.thresholds.size(); ++k) {
    const MaximinThresholds& prev = trace.thresholds[k - 1];
    const MaximinThresholds& cur = trace.thresholds[k];
    for (std::size_t i = 0; i < cur.values.size(); ++i) {
      if (!prev.values[i] || !cur.values[i]) continue;
      if (*cur.values[i] < *prev.values[i]) {
        result.Fail(game, "level " + std::to_string(cur.level),
                    ThresholdsToString(prev) + " -> " +
                        ThresholdsToString(cur));
        break;
      }
    }
  }
  return result;
}

CheckResult CheckTermination(const Game& game, const LevelTrace& trace) {
  CheckResult result{kCheckTermination};
  const std::size_t bound = game.num_profiles();
  if (static_cast<std::size_t>(trace.fixpoint_level) > bound) {
    result.Fail(game, "fixpoint",
                std::to_string(trace.fixpoint_level) + " rounds exceed |Σ|=" +
                    std::to_string(bound));
  }
  return result;
}

CheckResult CheckLevelOneClassicIr(const Game& game, const LevelTrace& trace) {
  CheckResult result{kCheckLevelOne};
  std::vector<Payoff> security(game.num_players());
  for (Player i = 0; i < game.num_players(); ++i) {
    std::vector<std::optional<Payoff>> row_min(game.num_strategies(i));
    for (ProfileIndex p = 0; p < game.num_profiles(); ++p) {
      auto& m = row_min[game.ProfileAt(p)[i]];
      const Payoff u = game.payoff(p, i);
      if (!m || u < *m) m = u;
    }
    security[i] = **std::max_element(row_min.begin(), row_min.end());
  }
  ProfileSet expected(game.num_profiles());
  for (ProfileIndex p = 0; p < game.num_profiles(); ++p) {
    bool ok = true;
    for (Player i = 0; i < game.num_players(); ++i) {
      ok = ok && game.payoff(p, i) >= security[i];
    }
    if (ok) expected.Insert(p);
  }
  if (expected != trace.SetAt(1)) {
    result.Fail(game, "S_1",
                "solver " + ProfileSetToString(game, trace.SetAt(1).Indices()) +
                    ", security levels give " +
                    ProfileSetToString(game, expected.Indices()));
  }
  return result;
}

CheckResult CheckParetoOptimality(const Game& game, const LevelTrace& trace) {
  CheckResult result{kCheckPareto};
  if (trace.outcome.kind == Outcome::Kind::kUniquePte &&
      !IsParetoOptimal(game, trace.outcome.profiles.front())) {
    result.Fail(game, game.ProfileToString(trace.outcome.profiles.front()),
                "PTE is Pareto-dominated");
  }
  return result;
}

CheckResult CheckUniqueness(const Game& game, const LevelTrace& trace) {
  CheckResult result{kCheckUniqueness};
  if (trace.outcome.kind == Outcome::Kind::kMultipleAtFixpoint) {
    result.Fail(game, OutcomeToString(game, trace.outcome),
                "game: " + SerializeGame(game));
  }
  return result;
}

CheckResult CheckHofstadter(const Game& game) {
  CheckResult result{kCheckHofstadter};
  const Outcome outcome = ComputePte(game);
  if (outcome.kind != Outcome::Kind::kUniquePte) return result;
  const StrategyProfile expected = HofstadterProfile(game);
  const ProfileIndex pte = outcome.profiles.front();
  if (game.IndexOf(expected) != pte) {
    result.Fail(game, game.ProfileToString(pte),
                "diagonal argmax is " + game.ProfileToString(expected) +
                    "; game: " + SerializeGame(game));
  }
  return result;
}

std::vector<CheckResult> RunLemmaChecks(const CanonicalStructure& structure) {
  return {CheckLemmaCascading(structure),
          CheckLemmaOmniscience(structure),
          CheckLemmaNecessaryRationality(structure),
          CheckLemmaNecessaryKnowledge(structure),
          CheckLemmaAgentDecisions(structure),
          CheckFullSupportRestricted(structure, structure.game())};
}

std::vector<CheckResult> RunGameChecks(const Game& game) {
  const LevelTrace trace = ComputeTrace(game);
  const OracleLevelSets oracle = ComputeOracleLevelSets(game);
  const CanonicalStructure structure = CanonicalStructure::Build(game);

  std::vector<CheckResult> out;
  out.push_back(CheckOracleEquivalence(game, trace, oracle));
  out.push_back(CheckNesting(game, trace));
  out.push_back(CheckMonotoneThresholds(game, trace));
  out.push_back(CheckTermination(game, trace));
  out.push_back(CheckLevelOneClassicIr(game, trace));
  for (CheckResult& r : RunLemmaChecks(structure)) out.push_back(std::move(r));

  out.push_back(VerifyTheoremLevel(structure, oracle, 1));
  CheckResult levelk{kCheckTheorem2};
  for (int k = 2; k <= trace.fixpoint_level + 1; ++k) {
    CheckResult r = VerifyTheoremLevel(structure, oracle, k);
    levelk.passed = levelk.passed && r.passed;
    for (auto& c : r.counterexamples) levelk.counterexamples.push_back(c);
  }
  out.push_back(std::move(levelk));
  out.push_back(VerifyPteCharacterization(structure));

  out.push_back(CheckParetoOptimality(game, trace));
  out.push_back(CheckUniqueness(game, trace));
  return out;
}

CheckAggregator::CheckAggregator(std::vector<std::string> names) {
  for (std::string& name : names) {
    by_name_.emplace(name, CheckResult{name});
    order_.push_back(std::move(name));
  }
}

void CheckAggregator::Add(const std::vector<CheckResult>& results,
                          const std::string& label) {
  for (const CheckResult& r : results) {
    auto [it, inserted] = by_name_.emplace(r.name, CheckResult{r.name});
    if (inserted) order_.push_back(r.name);
    CheckResult& merged = it->second;
    merged.passed = merged.passed && r.passed;
    for (Counterexample c : r.counterexamples) {
      if (!label.empty()) c.where = label + " " + c.where;
      merged.counterexamples.push_back(std::move(c));
    }
    for (const std::string& note : r.notes) {
      if (std::find(merged.notes.begin(), merged.notes.end(), note) ==
          merged.notes.end()) {
        merged.notes.push_back(note);
      }
    }
  }
}

std::vector<CheckResult> CheckAggregator::Results() const {
  std::vector<CheckResult> out;
  for (const std::string& name : order_) out.push_back(by_name_.at(name));
  return out;
}

bool CheckAggregator::AllPassed() const {
  return std::all_of(by_name_.begin(), by_name_.end(),
                     [](const auto& kv) { return kv.second.passed; });
}

bool SweepReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string ShapeToString(const std::vector<int>& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(shape[i]);
  }
  return out;
}

std::vector<int> ParseShape(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, 'x')) {
    if (part.empty() ||
        part.find_first_not_of("0123456789") != std::string::npos ||
        part.size() > 6) {
      throw std::invalid_argument("bad shape '" + text + "'");
    }
    const int n = std::stoi(part);
    if (n < 1) throw std::invalid_argument("bad shape '" + text + "'");
    out.push_back(n);
  }
  if (out.empty() || text.back() == 'x') {
    throw std::invalid_argument("bad shape '" + text + "'");
  }
  return out;
}

namespace {

const std::vector<std::string>& GameCheckNames() {
  static const std::vector<std::string> names = {
      kCheckOracle,      kCheckNesting,     kCheckThresholds,
      kCheckTermination, kCheckLevelOne,    kCheckCascading,
      kCheckOmniscience, kCheckRationality, kCheckKnowledge,
      kCheckDecisions,   kCheckFullSupport, kCheckTheorem1,
      kCheckTheorem2,    kCheckTheorem3,    kCheckPareto,
      kCheckUniqueness};
  return names;
}

}  // namespace

SweepReport RunSweep(std::uint64_t seed_begin, std::uint64_t seed_end,
                     const std::vector<std::vector<int>>& shapes) {
  CheckAggregator agg(GameCheckNames());
  SweepStats stats;
  for (const auto& shape : shapes) {
    for (std::uint64_t seed = seed_begin; seed < seed_end; ++seed) {
      const Game game = GenerateRandomGame(seed, shape);
      const LevelTrace trace = ComputeTrace(game);
      ++stats.games;
      switch (trace.outcome.kind) {
        case Outcome::Kind::kUniquePte:
          ++stats.unique_pte;
          break;
        case Outcome::Kind::kNoEquilibrium:
          ++stats.no_equilibrium;
          if (!stats.first_no_equilibrium) {
            stats.first_no_equilibrium = std::make_pair(shape, seed);
          }
          break;
        case Outcome::Kind::kMultipleAtFixpoint:
          ++stats.multiple;
          break;
      }
      stats.max_fixpoint_level =
          std::max(stats.max_fixpoint_level, trace.fixpoint_level);
      stats.worlds_checked +=
          game.num_profiles() * (trace.fixpoint_level + 3);
      agg.Add(RunGameChecks(game),
              "shape=" + ShapeToString(shape) +
                  " seed=" + std::to_string(seed));
    }
  }
  return SweepReport{agg.Results(), stats};
}

SweepReport RunSymmetricSweep(std::uint64_t seed_begin,
                              std::uint64_t seed_end) {
  CheckAggregator agg({kCheckHofstadter});
  SweepStats stats;
  for (std::uint64_t seed = seed_begin; seed < seed_end; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const Game game = GenerateRandomSymmetricGame(seed, n);
    const Outcome outcome = ComputePte(game);
    ++stats.games;
    if (outcome.kind == Outcome::Kind::kUniquePte) ++stats.unique_pte;
    if (outcome.kind == Outcome::Kind::kNoEquilibrium) ++stats.no_equilibrium;
    if (outcome.kind == Outcome::Kind::kMultipleAtFixpoint) ++stats.multiple;
    agg.Add({CheckHofstadter(game)},
            "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
  }
  return SweepReport{agg.Results(), stats};
}

std::string FormatReportText(const SweepReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      out << " (" << c.counterexamples.size() << " counterexamples)";
    }
    out << "\n";
    for (const Counterexample& ce : c.counterexamples) {
      out << "  counterexample game=" << ce.game_digest << " " << ce.where
          << ": " << ce.detail << "\n";
    }
    for (const std::string& note : c.notes) out << "  note: " << note << "\n";
  }
  return out.str();
}

std::string FormatReportSummaryJson(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.passed();
  j["games"] = report.stats.games;
  j["unique_pte"] = report.stats.unique_pte;
  j["no_equilibrium"] = report.stats.no_equilibrium;
  j["multiple"] = report.stats.multiple;
  j["max_fixpoint_level"] = report.stats.max_fixpoint_level;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const CheckResult& c : report.checks) {
    checks[c.name] = {{"passed", c.passed},
                      {"counterexamples", c.counterexamples.size()}};
  }
  j["checks"] = checks;
  return j.dump();
}

}  // namespace pte
