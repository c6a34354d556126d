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

#ifndef GTCOUNT_LIMIT_COUNTER_HPP_
#define GTCOUNT_LIMIT_COUNTER_HPP_

#include <string>
#include <vector>

#include "gtcount/cards.hpp"
#include "gtcount/count.hpp"
#include "gtcount/gamespec.hpp"
#include "gtcount/report.hpp"

namespace gtcount {

// One round of limit betting, enumerated exhaustively. Decision sequences are
// the within-round prefixes at which a player acts ("" shown as "_", "c",
// "cr", ...); actions append "-f", "-c" or "-r"; continuing sequences end the
// round with play going on, terminal ones end the game.
//
// In limit games stacks are deep enough that only the bet count matters, so
// bet sizes are not modeled at all.
struct LimitRoundProfile {
  Count decisions;
  Count decision_actions;
  Count continuing;
  Count terminal;

  std::vector<std::string> decision_seqs;
  std::vector<std::string> action_seqs;
  std::vector<std::string> continuing_seqs;
  std::vector<std::string> terminal_seqs;
};

// Enumerates one round under: check/call always legal, raise while fewer than
// max_bets bets have been made, fold only when facing a bet. A first round
// starts with the blind already posted (one bet consumed, the blind poster
// still owed an action, and the first player facing a foldable bet). In a
// last round the would-be continuing call sequences end the game instead.
LimitRoundProfile EnumerateLimitRound(int max_bets, bool first_round,
                                      bool last_round);

// Full limit-game size: per-round profiles scaled by the product of earlier
// rounds' continuing counts, then multiplied by the per-round deal counts.
// deals must carry canonical counts for every round.
SizeReport LimitGameSize(const GameSpec& spec, const DealCounts& deals);

}  // namespace gtcount

#endif  // GTCOUNT_LIMIT_COUNTER_HPP_
