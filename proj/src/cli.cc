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

#include "pte/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pte/elimination.h"
#include "pte/formula.h"
#include "pte/game_io.h"
#include "pte/kripke.h"
#include "pte/model_checker.h"
#include "pte/random_games.h"
#include "pte/verification.h"

namespace pte {
namespace {

using nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

Game LoadValidGame(const std::string& path) {
  ParsedGame parsed = LoadGameFile(path);
  if (!parsed.validation.ok) {
    std::string message = "game has ties:";
    for (const Violation& v : parsed.validation.violations) {
      message += "\n  " + DescribeViolation(parsed.game, v);
    }
    throw InvalidGameError(message);
  }
  return std::move(parsed.game);
}

ordered_json ProfileJson(const Game& game, ProfileIndex p) {
  const StrategyProfile profile = game.ProfileAt(p);
  ordered_json out = ordered_json::array();
  for (Player i = 0; i < game.num_players(); ++i) {
    out.push_back(game.strategy_label(i, profile[i]));
  }
  return out;
}

ordered_json ProfilesJson(const Game& game,
                          const std::vector<ProfileIndex>& profiles) {
  ordered_json out = ordered_json::array();
  for (ProfileIndex p : profiles) out.push_back(ProfileJson(game, p));
  return out;
}

const char* OutcomeKindName(Outcome::Kind kind) {
  switch (kind) {
    case Outcome::Kind::kUniquePte:
      return "PTE";
    case Outcome::Kind::kNoEquilibrium:
      return "NONE";
    case Outcome::Kind::kMultipleAtFixpoint:
      return "MULTIPLE";
  }
  return "?";
}

int OutcomeExitCode(const Outcome& outcome) {
  switch (outcome.kind) {
    case Outcome::Kind::kUniquePte:
      return kExitOk;
    case Outcome::Kind::kNoEquilibrium:
      return kExitFalse;
    case Outcome::Kind::kMultipleAtFixpoint:
      return kExitMultiple;
  }
  return kExitUsage;
}

std::string ThresholdText(const std::vector<Threshold>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i] ? std::to_string(*values[i]) : "DIVERGED";
  }
  return out + ")";
}

// "0..999" (inclusive) or a single seed; returns [begin, end).
std::pair<std::uint64_t, std::uint64_t> ParseSeedRange(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::uint64_t v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v + 1};
    }
    const std::string lo = s.substr(0, dots);
    const std::string hi = s.substr(dots + 2);
    const std::uint64_t a = std::stoull(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(s);
    const std::uint64_t b = std::stoull(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(s);
    if (b < a) return {a, a};
    return {a, b + 1};
  } catch (const std::logic_error&) {
    throw UsageError("bad seed range '" + s + "', expected A..B");
  }
}

void WriteFileOrStream(const std::string& path, const std::string& text,
                       std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct Options {
  std::string game;
  std::string format = "text";
  std::string formula;
  std::string world;
  std::optional<int> max_level;
  std::string seeds = "0..999";
  std::vector<std::string> shapes;
  std::string report;
  std::uint64_t seed = 0;
  std::string shape = "2x2";
  std::optional<int> symmetric;
  std::string output;
};

int Solve(const Options& o, std::ostream& out) {
  const Game game = LoadValidGame(o.game);
  const LevelTrace trace = ComputeTrace(game);
  if (o.format == "json") {
    ordered_json j;
    j["outcome"] = OutcomeKindName(trace.outcome.kind);
    j["profiles"] = ProfilesJson(game, trace.outcome.profiles);
    j["fixpoint_level"] = trace.fixpoint_level;
    out << j.dump() << "\n";
  } else {
    out << OutcomeToString(game, trace.outcome) << " [fixpoint level "
        << trace.fixpoint_level << "]\n";
  }
  return OutcomeExitCode(trace.outcome);
}

int Trace(const Options& o, std::ostream& out) {
  const Game game = LoadValidGame(o.game);
  const LevelTrace trace = ComputeTrace(game);
  if (o.format == "json") {
    ordered_json levels = ordered_json::array();
    for (const LevelSet& level : trace.levels) {
      ordered_json entry;
      entry["level"] = level.level;
      ordered_json thresholds = ordered_json::array();
      if (level.level > 0) {
        for (const Threshold& t : trace.thresholds[level.level - 1].values) {
          thresholds.push_back(t ? ordered_json(*t) : ordered_json(nullptr));
        }
      }
      entry["thresholds"] = thresholds;
      entry["survivors"] = ProfilesJson(game, level.members.Indices());
      levels.push_back(entry);
    }
    ordered_json j;
    j["levels"] = levels;
    j["fixpoint_level"] = trace.fixpoint_level;
    j["outcome"] = OutcomeKindName(trace.outcome.kind);
    j["profiles"] = ProfilesJson(game, trace.outcome.profiles);
    out << j.dump() << "\n";
  } else {
    for (const LevelSet& level : trace.levels) {
      const std::string thresholds =
          level.level == 0
              ? "()"
              : ThresholdText(trace.thresholds[level.level - 1].values);
      out << level.level << " | thresholds=" << thresholds << " | survivors="
          << ProfileSetToString(game, level.members.Indices()) << "\n";
    }
    out << "outcome=" << OutcomeToString(game, trace.outcome) << "\n";
  }
  return kExitOk;
}

int Check(const Options& o, std::ostream& out) {
  const auto [begin, end] = ParseSeedRange(o.seeds);
  std::vector<std::vector<int>> shapes;
  try {
    for (const std::string& s : o.shapes) shapes.push_back(ParseShape(s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (shapes.empty()) shapes = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};

  SweepReport report = RunSweep(begin, end, shapes);
  const SweepReport symmetric = RunSymmetricSweep(begin, end);
  for (const CheckResult& c : symmetric.checks) report.checks.push_back(c);

  std::string text = FormatReportText(report);
  const std::string summary = FormatReportSummaryJson(report);
  if (!o.report.empty()) {
    WriteFileOrStream(o.report, text + summary + "\n", out);
  }
  if (o.format == "json") {
    out << summary << "\n";
  } else {
    out << text << summary << "\n";
  }
  return report.passed() ? kExitOk : kExitFalse;
}

int CheckLemmas(const Options& o, std::ostream& out) {
  const Game game = LoadValidGame(o.game);
  const CanonicalStructure structure =
      CanonicalStructure::Build(game, o.max_level);
  const OracleLevelSets oracle = ComputeOracleLevelSets(game);
  std::vector<CheckResult> results = RunLemmaChecks(structure);
  const int top = structure.trace().fixpoint_level + 1;
  for (int k = 1; k <= top; ++k) {
    CheckResult r = VerifyTheoremLevel(structure, oracle, k);
    r.name += "[k=" + std::to_string(k) + "]";
    results.push_back(std::move(r));
  }
  results.push_back(VerifyPteCharacterization(structure));

  SweepReport report{results, {}};
  report.stats.games = 1;
  if (o.format == "json") {
    out << FormatReportSummaryJson(report) << "\n";
  } else {
    out << FormatReportText(report);
  }
  return report.passed() ? kExitOk : kExitFalse;
}

int Generate(const Options& o, std::ostream& out) {
  Game game = [&] {
    if (o.symmetric) {
      if (*o.symmetric < 1) throw UsageError("--symmetric needs n >= 1");
      return GenerateRandomSymmetricGame(o.seed, *o.symmetric);
    }
    try {
      return GenerateRandomGame(o.seed, ParseShape(o.shape));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  WriteFileOrStream(o.output, SerializeGame(game), out);
  return kExitOk;
}

int CompareCmd(const Options& o, std::ostream& out) {
  const Game game = LoadValidGame(o.game);
  const ComparisonReport r = Compare(game);
  if (o.format == "json") {
    ordered_json j;
    j["pte"] = {{"outcome", OutcomeKindName(r.pte.kind)},
                {"profiles", ProfilesJson(game, r.pte.profiles)}};
    j["pure_nash"] = ProfilesJson(game, r.pure_nash);
    j["individually_rational"] = ProfilesJson(game, r.individually_rational);
    j["pareto_optimal"] = ProfilesJson(game, r.pareto_optimal);
    j["hofstadter"] = r.hofstadter
                          ? ProfileJson(game, game.IndexOf(*r.hofstadter))
                          : ordered_json(nullptr);
    out << j.dump() << "\n";
  } else {
    std::string pte = OutcomeToString(game, r.pte);
    if (r.pte.kind == Outcome::Kind::kUniquePte) {
      pte = game.ProfileToString(r.pte.profiles.front());
    }
    out << "PTE=" << pte << "\n";
    out << "Nash=" << ProfileSetToString(game, r.pure_nash) << "\n";
    out << "S1=" << ProfileSetToString(game, r.individually_rational) << "\n";
    out << "Pareto=" << ProfileSetToString(game, r.pareto_optimal) << "\n";
    out << "Hofstadter="
        << (r.hofstadter ? game.ProfileToString(*r.hofstadter) : "n/a")
        << "\n";
  }
  return kExitOk;
}

int Eval(const Options& o, std::ostream& out) {
  const Game game = LoadValidGame(o.game);
  const Formula formula = ParseFormula(o.formula, game);
  const World world = ParseWorldLiteral(o.world, game);
  const CanonicalStructure structure =
      CanonicalStructure::Build(game, o.max_level);
  if (world.level > structure.max_level()) {
    throw UsageError("world level " + std::to_string(world.level) +
                     " exceeds max level " +
                     std::to_string(structure.max_level()));
  }
  EvalContext ctx(structure);
  const WorldId w = structure.Id(world);
  const bool value = ctx.Eval(w, formula);
  if (o.format == "json") {
    ordered_json j;
    j["formula"] = FormulaToString(formula, game);
    j["world"] = structure.WorldToString(w);
    j["class"] = WorldClassName(structure.ClassOf(w));
    j["value"] = value;
    out << j.dump() << "\n";
  } else {
    out << (value ? "true" : "false") << "\n";
  }
  return value ? kExitOk : kExitFalse;
}

int ExportStructure(const Options& o, std::ostream& out) {
  const Game game = LoadValidGame(o.game);
  const CanonicalStructure structure =
      CanonicalStructure::Build(game, o.max_level);
  WriteFileOrStream(o.output, ExportStructureDot(structure), out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Perfectly transparent equilibrium workbench", "pte"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", o.game, "game file (JSON)")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_max_level = [&](CLI::App* sub) {
    sub->add_option("--max-level", o.max_level,
                    "truncation level (default fixpoint + 2)")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "compute the PTE");
  add_game(solve);
  add_format(solve);

  CLI::App* trace = app.add_subcommand("trace", "print the elimination trace");
  add_game(trace);
  add_format(trace);

  CLI::App* check =
      app.add_subcommand("check", "run every check over random games");
  check->add_option("--seeds", o.seeds, "inclusive seed range A..B");
  check->add_option("--shape", o.shapes,
                    "strategy counts such as 3x3 (repeatable)");
  check->add_option("--report", o.report, "also write the report here");
  add_format(check);

  CLI::App* lemmas = app.add_subcommand(
      "check-lemmas", "check lemmas and theorems on one game");
  add_game(lemmas);
  add_max_level(lemmas);
  add_format(lemmas);

  CLI::App* generate = app.add_subcommand("generate", "write a random game");
  generate->add_option("--seed", o.seed, "RNG seed");
  generate->add_option("--shape", o.shape, "strategy counts such as 3x3");
  generate->add_option("--symmetric", o.symmetric,
                       "symmetric two-player game with n strategies each");
  generate->add_option("--out", o.output, "output path (default stdout)");

  CLI::App* compare =
      app.add_subcommand("compare", "PTE against other solution concepts");
  add_game(compare);
  add_format(compare);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula at a world");
  add_game(eval);
  eval->add_option("--formula", o.formula, "formula text")->required();
  eval->add_option("--world", o.world, "world literal such as (B,X)@2")
      ->required();
  add_max_level(eval);
  add_format(eval);

  CLI::App* export_structure = app.add_subcommand(
      "export-structure", "write the canonical structure as Graphviz");
  add_game(export_structure);
  add_max_level(export_structure);
  export_structure->add_option("--out", o.output,
                               "output path (default stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return Solve(o, out);
    if (*trace) return Trace(o, out);
    if (*check) return Check(o, out);
    if (*lemmas) return CheckLemmas(o, out);
    if (*generate) return Generate(o, out);
    if (*compare) return CompareCmd(o, out);
    if (*eval) return Eval(o, out);
    if (*export_structure) return ExportStructure(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pte
