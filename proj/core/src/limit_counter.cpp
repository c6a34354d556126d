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

#include "gtcount/limit_counter.hpp"

#include <string>
#include <utility>

namespace gtcount {

namespace {

class LimitRoundEnumerator {
 public:
  explicit LimitRoundEnumerator(bool last_round) : last_round_(last_round) {}

  LimitRoundProfile Take() && { return std::move(profile_); }

  // prefix is the round's betting string so far; raises_left counts bets
  // still allowed under the cap; facing_bet marks a live bet to the actor.
  // The first passive action of a round leaves the opponent an action; any
  // later one closes the round.
  void Node(const std::string& prefix, int raises_left, bool facing_bet,
            bool first_action) {
    profile_.decisions += 1ul;
    profile_.decision_seqs.push_back(prefix.empty() ? "_" : prefix);

    unsigned long actions = 1;
    if (facing_bet) {
      ++actions;
      profile_.action_seqs.push_back(prefix + "-f");
      profile_.terminal += 1ul;
      profile_.terminal_seqs.push_back(prefix + "f");
    }

    profile_.action_seqs.push_back(prefix + "-c");
    if (first_action) {
      Node(prefix + "c", raises_left, false, false);
    } else if (last_round_) {
      profile_.terminal += 1ul;
      profile_.terminal_seqs.push_back(prefix + "c");
    } else {
      profile_.continuing += 1ul;
      profile_.continuing_seqs.push_back(prefix + "c");
    }

    if (raises_left > 0) {
      ++actions;
      profile_.action_seqs.push_back(prefix + "-r");
      Node(prefix + "r", raises_left - 1, true, false);
    }
    profile_.decision_actions += actions;
  }

 private:
  const bool last_round_;
  LimitRoundProfile profile_;
};

}  // namespace

LimitRoundProfile EnumerateLimitRound(int max_bets, bool first_round,
                                      bool last_round) {
  if (max_bets < 1) throw Error("max_bets must be >= 1");
  LimitRoundEnumerator e(last_round);
  if (first_round) {
    // The blind spends one bet of the cap and is live: the opener may fold.
    e.Node("", max_bets - 1, /*facing_bet=*/true, /*first_action=*/true);
  } else {
    e.Node("", max_bets, /*facing_bet=*/false, /*first_action=*/true);
  }
  return std::move(e).Take();
}

SizeReport LimitGameSize(const GameSpec& spec, const DealCounts& deals) {
  spec.Validate();
  if (!spec.is_limit()) throw Error("LimitGameSize applies to limit games");

  // Stacks never cap limit betting, so rounds are independent: histories
  // reaching round r are the product of earlier rounds' continuing counts.
  std::vector<RawRoundTally> raw;
  Count reach = Count(1ul);
  for (int r = 0; r < spec.num_rounds; ++r) {
    LimitRoundProfile p = EnumerateLimitRound(spec.max_bets[r], r == 0,
                                              r == spec.num_rounds - 1);
    raw.push_back({p.decisions * reach, p.decision_actions * reach,
                   p.continuing * reach, p.terminal * reach});
    reach *= p.continuing;
  }
  return BuildSizeReport(spec, DescribeGame(spec), std::move(raw), deals);
}

}  // namespace gtcount
