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

#include "pte/formula.h"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace pte {

struct Formula::Node {
  Op op = Op::kTrue;
  int omniscience_level = 0;
  StrategyProfile profile;
  StrategyId strategy;
  std::vector<Formula> children;
};

Formula Formula::Make(Op op, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::True() { return Make(Op::kTrue, {}); }
Formula Formula::Rat() { return Make(Op::kRat, {}); }
Formula Formula::KnowsStrategies() { return Make(Op::kKnowsStrategies, {}); }

Formula Formula::Omniscience(int k) {
  if (k < 1) throw std::invalid_argument("omniscience level must be >= 1");
  auto node = std::make_shared<Node>();
  node->op = Op::kOmniscience;
  node->omniscience_level = k;
  return Formula(std::move(node));
}

Formula Formula::Play(StrategyProfile profile) {
  auto node = std::make_shared<Node>();
  node->op = Op::kPlay;
  node->profile = std::move(profile);
  return Formula(std::move(node));
}

Formula Formula::PlayAgent(StrategyId strategy) {
  auto node = std::make_shared<Node>();
  node->op = Op::kPlayAgent;
  node->strategy = strategy;
  return Formula(std::move(node));
}

Formula Formula::Not(Formula a) { return Make(Op::kNot, {std::move(a)}); }
Formula Formula::And(Formula a, Formula b) {
  return Make(Op::kAnd, {std::move(a), std::move(b)});
}
Formula Formula::Or(Formula a, Formula b) {
  return Make(Op::kOr, {std::move(a), std::move(b)});
}
Formula Formula::Implies(Formula a, Formula b) {
  return Make(Op::kImplies, {std::move(a), std::move(b)});
}
Formula Formula::Iff(Formula a, Formula b) {
  return Make(Op::kIff, {std::move(a), std::move(b)});
}
Formula Formula::Box(Formula a) { return Make(Op::kBox, {std::move(a)}); }
Formula Formula::Diamond(Formula a) {
  return Make(Op::kDiamond, {std::move(a)});
}
Formula Formula::DiamondC(Formula a) {
  return Make(Op::kDiamondC, {std::move(a)});
}

Formula::Op Formula::op() const { return node_->op; }
int Formula::omniscience_level() const { return node_->omniscience_level; }
const StrategyProfile& Formula::profile() const { return node_->profile; }
StrategyId Formula::strategy() const { return node_->strategy; }
std::size_t Formula::arity() const { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const {
  return node_->children.at(i);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  return x.op == y.op && x.omniscience_level == y.omniscience_level &&
         x.profile == y.profile && x.strategy == y.strategy &&
         x.children == y.children;
}

namespace {

enum class Tok {
  kIdent,
  kString,
  kLParen,
  kRParen,
  kComma,
  kBang,
  kAnd,
  kOr,
  kArrow,
  kIff,
  kAt,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> Lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const int column = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (IsIdentChar(c)) {
      std::size_t j = i;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      out.push_back({Tok::kIdent, text.substr(i, j - i), column});
      i = j;
    } else if (c == '"') {
      std::size_t j = i + 1;
      std::string value;
      while (j < text.size() && text[j] != '"') {
        if (text[j] == '\\' && j + 1 < text.size()) ++j;
        value += text[j++];
      }
      if (j >= text.size()) throw ParseError("unterminated string", 1, column);
      out.push_back({Tok::kString, value, column});
      i = j + 1;
    } else if (text.compare(i, 3, "<->") == 0) {
      out.push_back({Tok::kIff, "<->", column});
      i += 3;
    } else if (text.compare(i, 2, "->") == 0) {
      out.push_back({Tok::kArrow, "->", column});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case ',': kind = Tok::kComma; break;
        case '!': kind = Tok::kBang; break;
        case '&': kind = Tok::kAnd; break;
        case '|': kind = Tok::kOr; break;
        case '@': kind = Tok::kAt; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", 1,
                           column);
      }
      out.push_back({kind, std::string(1, c), column});
      ++i;
    }
  }
  out.push_back({Tok::kEnd, "", static_cast<int>(text.size()) + 1});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Game& game)
      : tokens_(Lex(text)), game_(game) {}

  Formula ParseAll() {
    Formula f = ParseIff();
    Expect(Tok::kEnd, "end of formula");
    return f;
  }

  World ParseWorld() {
    StrategyProfile profile = ParseProfileArgs();
    Expect(Tok::kAt, "'@'");
    const Token& level_token = Peek();
    const int level = ParseInteger("world level");
    if (level < 0) {
      throw ParseError("world level must be >= 0", 1, level_token.column);
    }
    Expect(Tok::kEnd, "end of world literal");
    return World{std::move(profile), level};
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      const Token& t = Peek();
      throw ParseError(std::string("expected ") + what +
                           (t.kind == Tok::kEnd ? " before end of input"
                                                : " near '" + t.text + "'"),
                       1, t.column);
    }
    return Next();
  }

  Formula ParseIff() {
    Formula lhs = ParseImplies();
    while (Accept(Tok::kIff)) lhs = Formula::Iff(lhs, ParseImplies());
    return lhs;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (Accept(Tok::kArrow)) return Formula::Implies(lhs, ParseImplies());
    return lhs;
  }

  Formula ParseOr() {
    Formula lhs = ParseAnd();
    while (Accept(Tok::kOr)) lhs = Formula::Or(lhs, ParseAnd());
    return lhs;
  }

  Formula ParseAnd() {
    Formula lhs = ParseUnary();
    while (Accept(Tok::kAnd)) lhs = Formula::And(lhs, ParseUnary());
    return lhs;
  }

  Formula ParseUnary() {
    if (Accept(Tok::kBang)) return Formula::Not(ParseUnary());
    if (Accept(Tok::kLParen)) {
      Formula inner = ParseIff();
      Expect(Tok::kRParen, "')'");
      return inner;
    }
    const Token& t = Peek();
    if (t.kind != Tok::kIdent) {
      throw ParseError(
          t.kind == Tok::kEnd ? "unexpected end of formula"
                              : "unexpected '" + t.text + "'",
          1, t.column);
    }
    Next();
    const std::string& word = t.text;
    if (word == "box") return Formula::Box(ParseUnary());
    if (word == "dia") return Formula::Diamond(ParseUnary());
    if (word == "dia_c") return Formula::DiamondC(ParseUnary());
    if (word == "true" || word == "TRUE") return Formula::True();
    if (word == "false" || word == "FALSE") return Formula::False();
    if (word == "RAT" || word == "rat") return Formula::Rat();
    if (word == "KS" || word == "ks") return Formula::KnowsStrategies();
    if (word == "omn" || word == "OMN") {
      Expect(Tok::kLParen, "'('");
      const Token& level_token = Peek();
      const int k = ParseInteger("omniscience level");
      if (k < 1) {
        throw ParseError("omniscience level must be >= 1", 1,
                         level_token.column);
      }
      Expect(Tok::kRParen, "')'");
      return Formula::Omniscience(k);
    }
    if (word == "play") return Formula::Play(ParseProfileArgs());
    if (word.starts_with("play_")) return ParsePlayAgent(t);
    throw ParseError("unknown identifier '" + word + "'", 1, t.column);
  }

  Formula ParsePlayAgent(const Token& head) {
    const std::string digits = head.text.substr(5);
    bool numeric = !digits.empty() && digits.size() < 6;
    for (char c : digits) {
      numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    }
    const int number = numeric ? std::stoi(digits) : 0;
    if (number < 1 || number > game_.num_players()) {
      throw ParseError("unknown player in '" + head.text + "'", 1,
                       head.column);
    }
    const Player player = number - 1;
    Expect(Tok::kLParen, "'('");
    const int s = ParseStrategy(player);
    Expect(Tok::kRParen, "')'");
    return Formula::PlayAgent(StrategyId{player, s});
  }

  StrategyProfile ParseProfileArgs() {
    const Token& open = Expect(Tok::kLParen, "'('");
    std::vector<int> choices;
    do {
      if (static_cast<int>(choices.size()) >= game_.num_players()) {
        throw ParseError("too many strategies in profile", 1, Peek().column);
      }
      choices.push_back(ParseStrategy(static_cast<Player>(choices.size())));
    } while (Accept(Tok::kComma));
    Expect(Tok::kRParen, "')'");
    if (static_cast<int>(choices.size()) != game_.num_players()) {
      throw ParseError("profile needs one strategy per player", 1,
                       open.column);
    }
    return StrategyProfile(std::move(choices));
  }

  int ParseStrategy(Player player) {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent && t.kind != Tok::kString) {
      throw ParseError("expected a strategy label", 1, t.column);
    }
    Next();
    int s = game_.FindStrategy(player, t.text);
    if (s < 0 && t.kind == Tok::kIdent && IsSmallNumber(t.text)) {
      const int index = std::stoi(t.text);
      if (index < game_.num_strategies(player)) s = index;
    }
    if (s < 0) {
      throw ParseError("unknown strategy '" + t.text + "' for player " +
                           game_.player_label(player),
                       1, t.column);
    }
    return s;
  }

  int ParseInteger(const char* what) {
    const Token& t = Peek();
    if (t.kind != Tok::kIdent || !IsSmallNumber(t.text)) {
      throw ParseError(std::string("expected ") + what, 1, t.column);
    }
    Next();
    return std::stoi(t.text);
  }

  static bool IsSmallNumber(const std::string& s) {
    if (s.empty() || s.size() > 9) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Game& game_;
};

int Precedence(Formula::Op op) {
  switch (op) {
    case Formula::Op::kIff:
      return 1;
    case Formula::Op::kImplies:
      return 2;
    case Formula::Op::kOr:
      return 3;
    case Formula::Op::kAnd:
      return 4;
    default:
      return 5;
  }
}

std::string Label(const std::string& label) {
  bool plain = !label.empty();
  for (char c : label) plain = plain && IsIdentChar(c);
  if (plain) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string Print(const Formula& f, const Game& game);

std::string PrintOperand(const Formula& f, const Game& game, bool wrap) {
  return wrap ? "(" + Print(f, game) + ")" : Print(f, game);
}

std::string Print(const Formula& f, const Game& game) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::kTrue:
      return "true";
    case Op::kRat:
      return "RAT";
    case Op::kKnowsStrategies:
      return "KS";
    case Op::kOmniscience:
      return "omn(" + std::to_string(f.omniscience_level()) + ")";
    case Op::kPlay: {
      std::string out = "play(";
      for (Player p = 0; p < f.profile().size(); ++p) {
        if (p > 0) out += ",";
        out += Label(game.strategy_label(p, f.profile()[p]));
      }
      return out + ")";
    }
    case Op::kPlayAgent: {
      const StrategyId s = f.strategy();
      return "play_" + std::to_string(s.player + 1) + "(" +
             Label(game.strategy_label(s.player, s.index)) + ")";
    }
    case Op::kNot:
      return "!" + PrintOperand(f.child(0), game,
                                Precedence(f.child(0).op()) < 5);
    case Op::kBox:
      return "box(" + Print(f.child(0), game) + ")";
    case Op::kDiamond:
      return "dia(" + Print(f.child(0), game) + ")";
    case Op::kDiamondC:
      return "dia_c(" + Print(f.child(0), game) + ")";
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
    case Op::kIff: {
      const int prec = Precedence(f.op());
      const bool right_assoc = f.op() == Op::kImplies;
      const int lp = Precedence(f.child(0).op());
      const int rp = Precedence(f.child(1).op());
      const bool wrap_left = lp < prec || (lp == prec && right_assoc);
      const bool wrap_right = rp < prec || (rp == prec && !right_assoc);
      const char* sep = f.op() == Op::kAnd   ? " & "
                        : f.op() == Op::kOr  ? " | "
                        : f.op() == Op::kIff ? " <-> "
                                             : " -> ";
      return PrintOperand(f.child(0), game, wrap_left) + sep +
             PrintOperand(f.child(1), game, wrap_right);
    }
  }
  return "";
}

}  // namespace

Formula ParseFormula(const std::string& text, const Game& game) {
  return Parser(text, game).ParseAll();
}

std::string FormulaToString(const Formula& formula, const Game& game) {
  return Print(formula, game);
}

World ParseWorldLiteral(const std::string& text, const Game& game) {
  return Parser(text, game).ParseWorld();
}

}  // namespace pte
