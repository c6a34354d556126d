// Copyright 2026 The gtcount Authors
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

#include "gtcount/gamespec.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace gtcount {

namespace {

std::string Trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<int> ParseInts(const std::string& value, int line_no,
                           const std::string& key) {
  std::vector<int> out;
  std::istringstream in(value);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": key '" + key +
                       "': expected integer, got '" + tok + "'");
    }
  }
  if (out.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": key '" + key +
                     "': empty value");
  }
  return out;
}

int ParseOneInt(const std::string& value, int line_no, const std::string& key) {
  std::vector<int> v = ParseInts(value, line_no, key);
  if (v.size() != 1) {
    throw ParseError("line " + std::to_string(line_no) + ": key '" + key +
                     "': expected a single integer");
  }
  return v[0];
}

}  // namespace

void GameSpec::Validate() const {
  auto fail = [](const std::string& msg) { throw Error("invalid game: " + msg); };
  if (small_blind <= 0) fail("small blind must be positive");
  if (small_blind > big_blind) fail("small blind exceeds big blind");
  if (big_blind > stack_size) fail("big blind exceeds stack size");
  if (num_rounds < 1) fail("need at least one round");
  if (static_cast<int>(board_cards.size()) != num_rounds) {
    fail("board must list one entry per round");
  }
  for (int b : board_cards) {
    if (b < 0) fail("board card counts cannot be negative");
  }
  if (num_hole_cards < 1) fail("need at least one hole card");
  if (num_suits < 1) fail("need at least one suit");
  if (num_ranks < 2) fail("need at least two ranks");
  int board_total = std::accumulate(board_cards.begin(), board_cards.end(), 0);
  if (2 * num_hole_cards + board_total > deck_size()) {
    fail("deck too small for the requested deal");
  }
  if (betting == BettingKind::kLimit) {
    if (static_cast<int>(max_bets.size()) != num_rounds) {
      fail("limit games need max_bets with one entry per round");
    }
    for (int m : max_bets) {
      if (m < 1) fail("max_bets entries must be >= 1");
    }
  } else if (!max_bets.empty()) {
    fail("max_bets only applies to limit games");
  }
}

GameSpec ParseGameFile(std::string_view text) {
  GameSpec spec;
  std::map<std::string, bool> seen;
  bool limit = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::map<std::string, std::pair<std::string, int>> values;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value', got '" + line + "'");
    }
    std::string key = Trim(line.substr(0, eq));
    std::string value = Trim(line.substr(eq + 1));
    static const char* kKnown[] = {"betting", "blinds", "stack",
                                   "rounds",  "board",  "suits",
                                   "ranks",   "hole",   "max_bets"};
    if (std::find_if(std::begin(kKnown), std::end(kKnown), [&](const char* k) {
          return key == k;
        }) == std::end(kKnown)) {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                       key + "'");
    }
    if (values.count(key)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" +
                       key + "'");
    }
    values[key] = {value, line_no};
  }

  for (const char* req : {"betting", "blinds", "stack", "rounds", "board",
                          "suits", "ranks", "hole"}) {
    if (!values.count(req)) {
      throw ParseError(std::string("missing required key '") + req + "'");
    }
  }

  {
    auto [value, ln] = values["betting"];
    if (value == "limit") {
      spec.betting = BettingKind::kLimit;
      limit = true;
    } else if (value == "nolimit") {
      spec.betting = BettingKind::kNoLimit;
    } else {
      throw ParseError("line " + std::to_string(ln) +
                       ": key 'betting': expected 'limit' or 'nolimit', got '" +
                       value + "'");
    }
  }
  {
    auto [value, ln] = values["blinds"];
    std::vector<int> blinds = ParseInts(value, ln, "blinds");
    if (blinds.size() != 2) {
      throw ParseError("line " + std::to_string(ln) +
                       ": key 'blinds': expected two integers (SB BB)");
    }
    spec.small_blind = blinds[0];
    spec.big_blind = blinds[1];
  }
  spec.stack_size = ParseOneInt(values["stack"].first, values["stack"].second,
                                "stack");
  spec.num_rounds = ParseOneInt(values["rounds"].first, values["rounds"].second,
                                "rounds");
  spec.board_cards = ParseInts(values["board"].first, values["board"].second,
                               "board");
  spec.num_suits = ParseOneInt(values["suits"].first, values["suits"].second,
                               "suits");
  spec.num_ranks = ParseOneInt(values["ranks"].first, values["ranks"].second,
                               "ranks");
  spec.num_hole_cards = ParseOneInt(values["hole"].first, values["hole"].second,
                                    "hole");
  if (values.count("max_bets")) {
    if (!limit) {
      throw ParseError("line " + std::to_string(values["max_bets"].second) +
                       ": key 'max_bets' only applies to limit games");
    }
    spec.max_bets = ParseInts(values["max_bets"].first,
                              values["max_bets"].second, "max_bets");
  } else if (limit) {
    throw ParseError("missing required key 'max_bets' (limit game)");
  }

  spec.Validate();
  return spec;
}

GameSpec LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open game file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseGameFile(buf.str());
}

std::string RenderGameFile(const GameSpec& spec) {
  std::ostringstream out;
  out << "betting = " << (spec.is_limit() ? "limit" : "nolimit") << "\n";
  out << "blinds = " << spec.small_blind << " " << spec.big_blind << "\n";
  out << "stack = " << spec.stack_size << "\n";
  out << "rounds = " << spec.num_rounds << "\n";
  out << "board =";
  for (int b : spec.board_cards) out << " " << b;
  out << "\n";
  out << "suits = " << spec.num_suits << "\n";
  out << "ranks = " << spec.num_ranks << "\n";
  out << "hole = " << spec.num_hole_cards << "\n";
  if (spec.is_limit()) {
    out << "max_bets =";
    for (int m : spec.max_bets) out << " " << m;
    out << "\n";
  }
  return out.str();
}

GameSpec BuiltinGame(std::string_view name) {
  GameSpec spec;
  spec.num_rounds = 4;
  spec.board_cards = {0, 3, 1, 1};
  spec.num_hole_cards = 2;
  spec.num_suits = 4;
  spec.num_ranks = 13;
  spec.small_blind = 1;
  spec.big_blind = 2;

  if (name == "acpc-limit-texas") {
    spec.betting = BettingKind::kLimit;
    // Stacks in the ACPC limit events are deep enough that the bet cap, not
    // the stack, limits betting; any sufficiently large value works.
    spec.stack_size = 20000;
    spec.max_bets = {4, 4, 4, 4};
  } else if (name == "acpc-nl-2007") {
    spec.stack_size = 1000;
  } else if (name == "acpc-nl-2009") {
    spec.stack_size = 400;
  } else if (name == "acpc-nl-2010") {
    spec.small_blind = 50;
    spec.big_blind = 100;
    spec.stack_size = 20000;
  } else if (name == "royal-2-20") {
    spec.stack_size = 20;
    spec.num_rounds = 2;
    spec.board_cards = {0, 3};
    spec.num_ranks = 5;
  } else {
    std::string known;
    for (const std::string& n : BuiltinGameNames()) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw Error("unknown builtin game '" + std::string(name) +
                "' (known: " + known + ")");
  }
  spec.Validate();
  return spec;
}

const std::vector<std::string>& BuiltinGameNames() {
  static const std::vector<std::string> kNames = {
      "acpc-limit-texas", "acpc-nl-2007", "acpc-nl-2009", "acpc-nl-2010",
      "royal-2-20"};
  return kNames;
}

std::string DescribeGame(const GameSpec& spec) {
  std::ostringstream out;
  out << (spec.is_limit() ? "limit" : "no-limit") << ", blinds $"
      << spec.small_blind << "/$" << spec.big_blind << ", stacks $"
      << spec.stack_size << ", " << spec.num_rounds
      << (spec.num_rounds == 1 ? " round" : " rounds") << ", "
      << spec.deck_size() << "-card deck";
  return out.str();
}

}  // namespace gtcount
