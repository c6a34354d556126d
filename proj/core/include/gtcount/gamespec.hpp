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

#ifndef GTCOUNT_GAMESPEC_HPP_
#define GTCOUNT_GAMESPEC_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gtcount/count.hpp"

namespace gtcount {

enum class BettingKind { kLimit, kNoLimit };

// Full parameterization of a heads-up poker variant: the ACPC limit and
// no-limit hold'em games, royal hold'em, and the [r-$s] family of reduced
// games. All money amounts are whole dollars. Stacks reset every hand
// (Doyle's game), so a single stack_size describes both players.
struct GameSpec {
  BettingKind betting = BettingKind::kNoLimit;
  int small_blind = 0;
  int big_blind = 0;
  int stack_size = 0;
  int num_rounds = 0;
  std::vector<int> board_cards;  // per-round public cards, e.g. {0, 3, 1, 1}
  int num_hole_cards = 0;
  int num_suits = 0;
  int num_ranks = 0;
  std::vector<int> max_bets;  // limit only; blind counts as a bet in round 1

  int deck_size() const { return num_suits * num_ranks; }
  bool is_limit() const { return betting == BettingKind::kLimit; }

  // Throws Error describing the first violated invariant.
  void Validate() const;

  bool operator==(const GameSpec&) const = default;
};

// Raised by the game-file parser; the message carries line number and key.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Parses the line-oriented `key = value` game definition format:
//
//   # comment
//   betting = nolimit
//   blinds  = 1 2
//   stack   = 400
//   rounds  = 4
//   board   = 0 3 1 1
//   suits   = 4
//   ranks   = 13
//   hole    = 2
//   max_bets = 4 4 4 4        (limit games only)
//
// Unknown keys, duplicate keys, missing keys, and invariant violations are
// all reported with the offending line number and key name.
GameSpec ParseGameFile(std::string_view text);
GameSpec LoadGameFile(const std::string& path);

// Canonical writer; ParseGameFile(RenderGameFile(s)) == s.
std::string RenderGameFile(const GameSpec& spec);

// Built-in games. Valid names: acpc-limit-texas, acpc-nl-2007, acpc-nl-2009,
// acpc-nl-2010, royal-2-20. Each equals the parse of the matching file
// shipped under data/games/.
GameSpec BuiltinGame(std::string_view name);
const std::vector<std::string>& BuiltinGameNames();

// One-line human summary, e.g. "no-limit, blinds $1/$2, stacks $400, 4 rounds".
std::string DescribeGame(const GameSpec& spec);

}  // namespace gtcount

#endif  // GTCOUNT_GAMESPEC_HPP_
