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

#include "gtcount/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gtcount {

namespace {

// Guarded walks stay below max_nodes decision/terminal events and stacks are
// at most in the tens of thousands, so 64-bit tallies cannot overflow: even
// actions stay below max_nodes * (stack + 2) << 2^64.
struct U64Tally {
  std::uint64_t decisions = 0;
  std::uint64_t actions = 0;
  std::uint64_t terminal = 0;
  std::uint64_t continuing_total = 0;
  std::vector<std::uint64_t> continuing_by_stack;
};

RoundTally ToRoundTally(const U64Tally& t) {
  RoundTally out;
  out.decisions = Count(t.decisions);
  out.infoset_actions = Count(t.actions);
  out.terminal = Count(t.terminal);
  out.continuing_total = Count(t.continuing_total);
  out.continuing_by_stack.reserve(t.continuing_by_stack.size());
  for (std::uint64_t v : t.continuing_by_stack) {
    out.continuing_by_stack.emplace_back(v);
  }
  return out;
}

class NolimitWalker {
 public:
  NolimitWalker(const GameSpec& spec, std::uint64_t max_nodes)
      : spec_(spec), max_nodes_(max_nodes), rounds_(spec.num_rounds) {
    for (auto& r : rounds_) {
      r.continuing_by_stack.assign(spec_.stack_size + 1, 0);
    }
  }

  OracleResult Walk() {
    const int m0 = spec_.stack_size - spec_.small_blind;
    const int b0 = spec_.big_blind - spec_.small_blind;
    if (m0 == 0) {
      CloseRound(0, 0);
    } else {
      Node(0, m0, b0, true);
    }
    OracleResult out;
    out.nodes_visited = nodes_;
    out.rounds.reserve(rounds_.size());
    for (const U64Tally& t : rounds_) out.rounds.push_back(ToRoundTally(t));
    return out;
  }

 private:
  void Bump() {
    if (++nodes_ > max_nodes_) {
      throw OracleTooLarge("betting walk exceeded the node guard of " +
                               std::to_string(max_nodes_),
                           Count(max_nodes_));
    }
  }

  void CloseRound(int round, int stacks_left) {
    if (round == spec_.num_rounds - 1) {
      Bump();
      ++rounds_[round].terminal;
      return;
    }
    ++rounds_[round].continuing_by_stack[stacks_left];
    ++rounds_[round].continuing_total;
    if (stacks_left == 0) {
      // Both all-in: the rest of the game is forced card dealing.
      CloseRound(round + 1, 0);
    } else {
      Node(round + 1, stacks_left, 0, true);
    }
  }

  void Node(int round, int m, int b, bool check_allowed) {
    Bump();
    U64Tally& t = rounds_[round];
    ++t.decisions;

    const ActionMenu menu =
        LegalActions({round, m, b, check_allowed}, spec_);
    t.actions += static_cast<std::uint64_t>(menu.num_actions());

    if (menu.fold_legal) {
      Bump();
      ++t.terminal;
    }

    const int mb = m - b;
    if (check_allowed && mb > 0) {
      Node(round, mb, 0, false);
    } else {
      CloseRound(round, mb);
    }

    if (menu.allin_underraise) {
      Node(round, mb, *menu.allin_underraise, false);
    } else {
      for (int r = menu.raise_min; r <= menu.raise_max; ++r) {
        Node(round, mb, r, false);
      }
    }
  }

  const GameSpec& spec_;
  const std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<U64Tally> rounds_;
};

class LimitWalker {
 public:
  explicit LimitWalker(const GameSpec& spec) : spec_(spec) {}

  OracleResult Walk() {
    OracleResult out;
    for (int r = 0; r < spec_.num_rounds; ++r) {
      round_ = U64Tally{};
      const bool first = r == 0;
      const bool last = r == spec_.num_rounds - 1;
      // A first round starts with the blind posted and the poster still to
      // act; the blind is a live bet, so fold is legal immediately and one
      // bet of the cap is already spent.
      Node(first ? spec_.max_bets[r] - 1 : spec_.max_bets[r],
           /*facing_bet=*/first, /*first_action=*/true, last);
      out.rounds.push_back(ToRoundTally(round_));
    }
    out.nodes_visited = nodes_;
    return out;
  }

 private:
  void Node(int bets_left_from, bool facing_bet, bool first_action,
            bool last) {
    // bets_left_from counts bets still allowed (max_bets minus bets made).
    ++nodes_;
    ++round_.decisions;
    const bool can_raise = bets_left_from > 0;
    round_.actions += 1u + (facing_bet ? 1u : 0u) + (can_raise ? 1u : 0u);

    if (facing_bet) {
      ++nodes_;
      ++round_.terminal;  // fold
    }
    if (first_action) {
      Node(bets_left_from, false, false, last);
    } else {
      ++nodes_;
      if (last) {
        ++round_.terminal;
      } else {
        ++round_.continuing_total;
      }
    }
    if (can_raise) Node(bets_left_from - 1, true, false, last);
  }

  const GameSpec& spec_;
  std::uint64_t nodes_ = 0;
  U64Tally round_;
};

// Exact count of depth<=2 raise chains from the preflop base, in O(stack)
// integer steps. A cheap lower bound on the walk size, used to refuse huge
// games without even running the dynamic program.
std::uint64_t DepthTwoLowerBound(const GameSpec& spec) {
  const int m0 = spec.stack_size - spec.small_blind;
  const int b0 = spec.big_blind - spec.small_blind;
  if (m0 <= b0) return 1;
  std::uint64_t nodes = 1;  // the base decision
  const int pool = m0 - b0;  // money behind after calling
  for (int r1 = std::max(b0, spec.big_blind); r1 <= pool; ++r1) {
    ++nodes;  // the opponent node created by raising r1
    const int re_max = pool - r1;
    const int re_min = std::max(r1, spec.big_blind);
    if (re_max >= re_min) {
      nodes += static_cast<std::uint64_t>(re_max - re_min + 1);
    } else if (re_max >= 1) {
      ++nodes;
    }
  }
  return nodes;
}

}  // namespace

OracleResult WalkBetting(const GameSpec& spec, const OracleLimits& limits) {
  spec.Validate();
  if (spec.betting == BettingKind::kLimit) {
    return LimitWalker(spec).Walk();
  }

  if (std::uint64_t lb = DepthTwoLowerBound(spec); lb > limits.max_nodes) {
    throw OracleTooLarge(
        "betting walk refused: at least " + std::to_string(lb) +
            " nodes (guard " + std::to_string(limits.max_nodes) + ")",
        Count(lb));
  }
  // Exact size from the dynamic program, one round at a time so oversized
  // games are refused as soon as the running total clears the guard.
  const Count guard = Count(limits.max_nodes);
  Count estimate;
  RoundSeed seed = RoundSeed::Preflop();
  for (int r = 0; r < spec.num_rounds; ++r) {
    RoundTally tally = RunRoundPass(spec, r, seed);
    estimate += tally.decisions;
    estimate += tally.terminal;
    if (estimate > guard) {
      throw OracleTooLarge(
          "betting walk refused: an estimated " + estimate.ToDecimal() +
              (r + 1 < spec.num_rounds ? "+" : "") + " nodes (guard " +
              guard.ToDecimal() + ")",
          estimate);
    }
    if (r + 1 < spec.num_rounds) {
      seed = RoundSeed::Carried(std::move(tally.continuing_by_stack));
    }
  }

  return NolimitWalker(spec, limits.max_nodes).Walk();
}

}  // namespace gtcount
