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

#ifndef PTE_KRIPKE_H_
#define PTE_KRIPKE_H_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pte/elimination.h"
#include "pte/game.h"

namespace pte {

// Worlds of the canonical structure are pairs (profile, level) on the grid
// Σ × {0..max_level}.
struct World {
  StrategyProfile profile;
  int level = 0;

  friend auto operator<=>(const World&, const World&) = default;
};

// Dense world handle: level * |Σ| + profile index.
using WorldId = std::size_t;

enum class WorldClass {
  kImpossible,         // outside Λ; atoms are assigned by table
  kNonNormalPossible,  // Λ \ Ξ: nothing necessary, everything possible
  kNormal,             // Ξ
};

const char* WorldClassName(WorldClass c);

// Manual truth assignment of a logically impossible world. The canonical
// table sets RAT, K(σ), play(σ(w)) and OMN^λ(w) to true and every other
// play/OMN atom to false.
struct ImpossibleAtoms {
  bool rat = true;
  bool knows_strategies = true;
  ProfileIndex played = 0;
  int omniscience_level = 0;
};

// The canonical Kripke structure of a tie-free game, truncated at
// max_level. Immutable once built; StructureEditor exists to corrupt copies
// for checker tests.
//
//   Λ = {(s, k) | k >= 1, s ∈ S_k}         logically possible worlds
//   Ξ = {(s, k) | k >= 2, s ∈ S_k}         normal worlds
//   K_i(w, w')  iff  w = w'
//   L_i(w, w')  iff  w' ∈ Λ or w ∉ Ξ
//
// The closest-state function f(w, i, s') is tabulated at build time.
class CanonicalStructure {
 public:
  // With no max_level, uses fixpoint_level + 2. Throws InvalidGameError if
  // the game has ties and std::invalid_argument if max_level < 0.
  static CanonicalStructure Build(const Game& game,
                                  std::optional<int> max_level = std::nullopt);

  const Game& game() const { return game_; }
  const LevelTrace& trace() const { return trace_; }
  int max_level() const { return max_level_; }
  std::size_t num_worlds() const { return classes_.size(); }
  int num_players() const { return game_.num_players(); }

  WorldId Id(ProfileIndex profile, int level) const;
  WorldId Id(const World& world) const;
  World WorldAt(WorldId w) const;
  int LevelOf(WorldId w) const;
  ProfileIndex ProfileOf(WorldId w) const;
  // σ_i(w).
  int StrategyOf(WorldId w, Player agent) const;

  WorldClass ClassOf(WorldId w) const { return classes_.at(w); }
  bool IsLogicallyPossible(WorldId w) const {
    return ClassOf(w) != WorldClass::kImpossible;
  }
  bool IsNormal(WorldId w) const { return ClassOf(w) == WorldClass::kNormal; }

  // The agent argument is unused by the canonical relations.
  bool LogicallyAccessible(WorldId from, WorldId to, Player agent) const;
  bool EpistemicallyAccessible(WorldId from, WorldId to, Player agent) const;
  std::vector<WorldId> EpistemicSuccessors(WorldId from, Player agent) const;

  // f(w, i, s'). σ_i of the result is always s'.
  WorldId ClosestState(WorldId w, Player agent, int strategy) const;

  // Throws std::logic_error for logically possible worlds.
  const ImpossibleAtoms& ImpossibleValuation(WorldId w) const;

  std::string WorldToString(WorldId w) const;

 private:
  friend class StructureEditor;

  CanonicalStructure(Game game, LevelTrace trace, int max_level);
  std::size_t FIndex(WorldId w, Player agent, int strategy) const;
  WorldId ComputeClosestState(WorldId w, Player agent, int strategy) const;

  Game game_;
  LevelTrace trace_;
  int max_level_ = 0;
  std::vector<WorldClass> classes_;
  std::vector<int> strategy_offsets_;  // per agent, into a row of closest_
  int strategies_per_world_ = 0;
  std::vector<WorldId> closest_;
  std::vector<std::optional<ImpossibleAtoms>> impossible_atoms_;
  // Extra K links on top of equality; empty for canonical structures.
  std::set<std::pair<WorldId, WorldId>> extra_epistemic_links_;
};

// Mutates a structure in place to build deliberately broken fixtures.
class StructureEditor {
 public:
  explicit StructureEditor(CanonicalStructure& structure)
      : structure_(structure) {}

  void SetClass(WorldId w, WorldClass c);
  void SetClosestState(WorldId w, Player agent, int strategy, WorldId target);
  void SetImpossibleAtoms(WorldId w, const ImpossibleAtoms& atoms);
  // Makes `to` epistemically accessible from `from` for every agent.
  void AddEpistemicLink(WorldId from, WorldId to);

 private:
  CanonicalStructure& structure_;
};

// Graphviz rendering: one node per world, one edge per deviation entry of f.
// Logical accessibility is summarized in the graph label.
std::string ExportStructureDot(const CanonicalStructure& structure);

}  // namespace pte

#endif  // PTE_KRIPKE_H_
