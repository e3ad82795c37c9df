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

#include <sstream>
#include <stdexcept>

namespace pte {

const char* WorldClassName(WorldClass c) {
  switch (c) {
    case WorldClass::kImpossible:
      return "IMPOSSIBLE";
    case WorldClass::kNonNormalPossible:
      return "NONNORMAL_POSSIBLE";
    case WorldClass::kNormal:
      return "NORMAL";
  }
  return "?";
}

CanonicalStructure::CanonicalStructure(Game game, LevelTrace trace,
                                       int max_level)
    : game_(std::move(game)), trace_(std::move(trace)), max_level_(max_level) {}

CanonicalStructure CanonicalStructure::Build(const Game& game,
                                             std::optional<int> max_level) {
  LevelTrace trace = ComputeTrace(game);
  const int top = max_level.value_or(trace.fixpoint_level + 2);
  if (top < 0) throw std::invalid_argument("max_level must be >= 0");

  CanonicalStructure s(game, std::move(trace), top);
  const std::size_t n = game.num_profiles();
  const std::size_t worlds = n * static_cast<std::size_t>(top + 1);

  s.classes_.resize(worlds);
  s.impossible_atoms_.resize(worlds);
  for (WorldId w = 0; w < worlds; ++w) {
    const int k = s.LevelOf(w);
    const ProfileIndex p = s.ProfileOf(w);
    const bool in_lambda = k >= 1 && s.trace_.SetAt(k).Contains(p);
    if (!in_lambda) {
      s.classes_[w] = WorldClass::kImpossible;
      s.impossible_atoms_[w] = ImpossibleAtoms{true, true, p, k};
    } else {
      s.classes_[w] =
          k >= 2 ? WorldClass::kNormal : WorldClass::kNonNormalPossible;
    }
  }

  for (Player i = 0; i < game.num_players(); ++i) {
    s.strategy_offsets_.push_back(s.strategies_per_world_);
    s.strategies_per_world_ += game.num_strategies(i);
  }
  s.closest_.resize(worlds * s.strategies_per_world_);
  for (WorldId w = 0; w < worlds; ++w) {
    for (Player i = 0; i < game.num_players(); ++i) {
      for (int t = 0; t < game.num_strategies(i); ++t) {
        s.closest_[s.FIndex(w, i, t)] = s.ComputeClosestState(w, i, t);
      }
    }
  }
  return s;
}

WorldId CanonicalStructure::ComputeClosestState(WorldId w, Player agent,
                                                int strategy) const {
  const int level = LevelOf(w);
  const StrategyProfile current = game_.ProfileAt(ProfileOf(w));
  if (level == 0) return Id(game_.IndexOf(current.With(agent, strategy)), 0);
  if (current[agent] == strategy) return w;

  // Worst case for the deviator among S_{λ-1} profiles where it plays
  // `strategy`.
  const ProfileSet& below = trace_.SetAt(level - 1);
  std::optional<ProfileIndex> argmin;
  bool tie = false;
  for (ProfileIndex q : below.Indices()) {
    if (game_.ProfileAt(q)[agent] != strategy) continue;
    if (!argmin) {
      argmin = q;
      continue;
    }
    const Payoff u = game_.payoff(q, agent);
    const Payoff best = game_.payoff(*argmin, agent);
    if (u < best) {
      argmin = q;
      tie = false;
    } else if (u == best) {
      tie = true;
    }
  }
  if (tie) {
    throw InvalidGameError("closest state is ambiguous: tied payoffs for " +
                           game_.player_label(agent));
  }
  if (argmin) return Id(*argmin, level - 1);
  return Id(game_.IndexOf(current.With(agent, strategy)), level - 1);
}

std::size_t CanonicalStructure::FIndex(WorldId w, Player agent,
                                       int strategy) const {
  if (w >= num_worlds()) throw std::out_of_range("world out of range");
  if (agent < 0 || agent >= game_.num_players() || strategy < 0 ||
      strategy >= game_.num_strategies(agent)) {
    throw std::out_of_range("strategy out of range");
  }
  return w * strategies_per_world_ + strategy_offsets_[agent] + strategy;
}

WorldId CanonicalStructure::Id(ProfileIndex profile, int level) const {
  if (level < 0 || level > max_level_ || profile >= game_.num_profiles()) {
    throw std::out_of_range("world outside the structure");
  }
  return static_cast<std::size_t>(level) * game_.num_profiles() + profile;
}

WorldId CanonicalStructure::Id(const World& world) const {
  return Id(game_.IndexOf(world.profile), world.level);
}

World CanonicalStructure::WorldAt(WorldId w) const {
  return World{game_.ProfileAt(ProfileOf(w)), LevelOf(w)};
}

int CanonicalStructure::LevelOf(WorldId w) const {
  return static_cast<int>(w / game_.num_profiles());
}

ProfileIndex CanonicalStructure::ProfileOf(WorldId w) const {
  return w % game_.num_profiles();
}

int CanonicalStructure::StrategyOf(WorldId w, Player agent) const {
  return game_.ProfileAt(ProfileOf(w))[agent];
}

bool CanonicalStructure::LogicallyAccessible(WorldId from, WorldId to,
                                             Player /*agent*/) const {
  return IsLogicallyPossible(to) || !IsNormal(from);
}

bool CanonicalStructure::EpistemicallyAccessible(WorldId from, WorldId to,
                                                 Player /*agent*/) const {
  return from == to || extra_epistemic_links_.contains({from, to});
}

std::vector<WorldId> CanonicalStructure::EpistemicSuccessors(
    WorldId from, Player /*agent*/) const {
  std::vector<WorldId> out{from};
  for (auto it = extra_epistemic_links_.lower_bound({from, 0});
       it != extra_epistemic_links_.end() && it->first == from; ++it) {
    if (it->second != from) out.push_back(it->second);
  }
  return out;
}

WorldId CanonicalStructure::ClosestState(WorldId w, Player agent,
                                         int strategy) const {
  return closest_[FIndex(w, agent, strategy)];
}

const ImpossibleAtoms& CanonicalStructure::ImpossibleValuation(
    WorldId w) const {
  const auto& atoms = impossible_atoms_.at(w);
  if (!IsLogicallyPossible(w) && atoms) return *atoms;
  throw std::logic_error("world " + WorldToString(w) +
                         " has no manual valuation");
}

std::string CanonicalStructure::WorldToString(WorldId w) const {
  return game_.ProfileToString(ProfileOf(w)) + "@" +
         std::to_string(LevelOf(w));
}

void StructureEditor::SetClass(WorldId w, WorldClass c) {
  structure_.classes_.at(w) = c;
  auto& atoms = structure_.impossible_atoms_.at(w);
  if (c == WorldClass::kImpossible && !atoms) {
    atoms = ImpossibleAtoms{true, true, structure_.ProfileOf(w),
                            structure_.LevelOf(w)};
  }
}

void StructureEditor::SetClosestState(WorldId w, Player agent, int strategy,
                                      WorldId target) {
  if (target >= structure_.num_worlds()) {
    throw std::out_of_range("world out of range");
  }
  structure_.closest_[structure_.FIndex(w, agent, strategy)] = target;
}

void StructureEditor::SetImpossibleAtoms(WorldId w,
                                         const ImpossibleAtoms& atoms) {
  structure_.impossible_atoms_.at(w) = atoms;
}

void StructureEditor::AddEpistemicLink(WorldId from, WorldId to) {
  if (from >= structure_.num_worlds() || to >= structure_.num_worlds()) {
    throw std::out_of_range("world out of range");
  }
  structure_.extra_epistemic_links_.insert({from, to});
}

std::string ExportStructureDot(const CanonicalStructure& structure) {
  const Game& game = structure.game();
  std::ostringstream out;
  out << "digraph canonical_structure {\n";
  out << "  label=\"L_i: from NORMAL worlds to every logically possible world;"
         " from every other world to all worlds. K_i: equality.\";\n";
  out << "  node [shape=box];\n";
  for (WorldId w = 0; w < structure.num_worlds(); ++w) {
    out << "  w" << w << " [label=\""
        << game.ProfileToString(structure.ProfileOf(w)) << ","
        << structure.LevelOf(w) << "," << WorldClassName(structure.ClassOf(w))
        << "\"];\n";
  }
  for (WorldId w = 0; w < structure.num_worlds(); ++w) {
    for (Player i = 0; i < game.num_players(); ++i) {
      for (int s = 0; s < game.num_strategies(i); ++s) {
        if (s == structure.StrategyOf(w, i)) continue;
        out << "  w" << w << " -> w" << structure.ClosestState(w, i, s)
            << " [label=\"f:" << game.player_label(i) << "→"
            << game.strategy_label(i, s) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pte
