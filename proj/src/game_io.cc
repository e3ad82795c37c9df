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

#include "pte/game_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace pte {
namespace {

using nlohmann::json;

// Converts a byte offset into a 1-based (line, column) pair.
std::pair<int, int> LineColumn(const std::string& text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& RequireKey(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("missing key \"") + key + "\"", 0, 0);
  }
  return *it;
}

std::vector<std::string> StringArray(const json& node, const std::string& what) {
  if (!node.is_array()) throw ParseError(what + " must be an array", 0, 0);
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw ParseError(what + " must contain only strings", 0, 0);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ParsedGame ParseGame(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = LineColumn(text, offset);
    throw ParseError("invalid JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("game must be a JSON object", 1, 1);

  std::vector<std::string> players =
      StringArray(RequireKey(doc, "players"), "\"players\"");
  if (players.empty()) throw ParseError("\"players\" must not be empty", 0, 0);

  const json& strategies_node = RequireKey(doc, "strategies");
  if (!strategies_node.is_array()) {
    throw ParseError("\"strategies\" must be an array", 0, 0);
  }
  std::vector<std::vector<std::string>> strategies;
  for (std::size_t p = 0; p < strategies_node.size(); ++p) {
    strategies.push_back(StringArray(
        strategies_node[p], "\"strategies\"[" + std::to_string(p) + "]"));
  }

  const json& payoffs_node = RequireKey(doc, "payoffs");
  if (!payoffs_node.is_array()) {
    throw ParseError("\"payoffs\" must be an array", 0, 0);
  }
  std::vector<std::vector<Payoff>> payoffs;
  for (std::size_t p = 0; p < payoffs_node.size(); ++p) {
    const json& row = payoffs_node[p];
    const std::string what = "\"payoffs\"[" + std::to_string(p) + "]";
    if (!row.is_array()) throw ParseError(what + " must be an array", 0, 0);
    std::vector<Payoff> values;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw ParseError(what + " must contain only integers", 0, 0);
      }
      values.push_back(v.get<Payoff>());
    }
    payoffs.push_back(std::move(values));
  }

  try {
    Game game(std::move(players), std::move(strategies), std::move(payoffs));
    ValidationReport report = ValidateGame(game);
    return ParsedGame{std::move(game), std::move(report)};
  } catch (const InvalidGameError& e) {
    throw ParseError(std::string("dimension mismatch: ") + e.what(), 0, 0);
  }
}

std::string SerializeGame(const Game& game) {
  json strategies = json::array();
  for (const auto& labels : game.strategy_labels()) strategies.push_back(labels);
  json payoffs = json::array();
  for (Player p = 0; p < game.num_players(); ++p) {
    payoffs.push_back(game.payoffs(p));
  }

  std::ostringstream out;
  out << "{\n";
  out << "  \"players\": " << json(game.player_labels()).dump() << ",\n";
  out << "  \"strategies\": " << strategies.dump() << ",\n";
  out << "  \"payoffs\": [\n";
  for (std::size_t p = 0; p < payoffs.size(); ++p) {
    out << "    " << payoffs[p].dump() << (p + 1 < payoffs.size() ? "," : "")
        << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

ParsedGame LoadGameFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read game file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

}  // namespace pte
