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

#ifndef GTCOUNT_NOLIMIT_COUNTER_HPP_
#define GTCOUNT_NOLIMIT_COUNTER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gtcount/cards.hpp"
#include "gtcount/count.hpp"
#include "gtcount/gamespec.hpp"
#include "gtcount/report.hpp"

namespace gtcount {

// A no-limit betting situation is fully determined by three factors besides
// the round: the acting player's remaining stack m, the bet b they face, and
// whether their passive action leaves the opponent an action in this round
// (check_allowed). Two histories reaching the same configuration have
// identical subtrees, which is what makes counting by configuration instead
// of by history possible.
//
// With equal starting stacks the opponent's remaining money is always
// m - bet_faced, so it needs no field of its own.
struct BettingConfig {
  int round = 0;
  int stack = 0;       // actor's remaining money m
  int bet_faced = 0;   // b, the amount needed to call
  bool check_allowed = false;

  // check_allowed is true only where the round's first passive action has
  // not yet happened: the preflop base (facing BB - SB) and post-flop
  // openers (facing 0).
  void Validate(const GameSpec& spec) const;
};

// The legal actions at a configuration.
struct ActionMenu {
  enum class Passive {
    kCheckContinues,   // b == 0, opponent still to act
    kCallContinues,    // b > 0, opponent still to act (the preflop limp)
    kPassiveEndsRound, // call or check-back closing the round
    kCallAllIn,        // call leaves both players all-in
  };

  bool fold_legal = false;
  Passive passive = Passive::kPassiveEndsRound;
  // Inclusive range of raise increments beyond the call; empty when
  // raise_min > raise_max, as defaulted.
  int raise_min = 1;
  int raise_max = 0;
  // The forced all-in raise when the stack cannot cover a nominal min-raise.
  std::optional<int> allin_underraise;

  int num_raises() const {
    if (allin_underraise) return 1;
    return raise_max >= raise_min ? raise_max - raise_min + 1 : 0;
  }
  int num_actions() const { return (fold_legal ? 1 : 0) + 1 + num_raises(); }
};

// Applies the betting rules: fold only when facing a bet; a min-raise is the
// larger of the bet faced and the big blind (the blinds count as bets);
// raises run in whole dollars up to the opponent-matchable all-in m - b; an
// all-in below the nominal minimum is still legal.
ActionMenu LegalActions(const BettingConfig& cfg, const GameSpec& spec);

// Per-round counters. Histories are cumulative from the start of the game.
// continuing_by_stack[s] counts round-ending histories that reach the next
// round with both stacks at s; index 0 holds both-all-in histories, which
// carry forward without further decisions and end the game in the last
// round.
struct RoundTally {
  Count decisions;
  Count infoset_actions;
  Count terminal;
  Count continuing_total;
  std::vector<Count> continuing_by_stack;

  RawRoundTally ToRaw() const {
    return {decisions, infoset_actions, continuing_total, terminal};
  }
};

// How raise fan-out is applied to the lattice.
//   kRangeSum: each raise range [r_lo, m-b] becomes one range-start marker on
//     the target row, accumulated by prefix sum when the row is swept. This
//     drops the round pass from O(S^3) to O(S^2) big-integer additions.
//   kDirect: every raise increment updates its target cell individually, as
//     a straight reading of the inductive step. Reference path for tests.
//   kDiskSpool: kRangeSum with the range markers spooled to banded temporary
//     files instead of held in memory. The $20000-stack game needs 10+ GB of
//     marker storage; this mode runs it in under 2 GB of RAM plus scratch
//     disk. Identical results, slower constant factor.
enum class SweepMode { kRangeSum, kDirect, kDiskSpool };

// Sweep tuning. Implicit construction from a SweepMode keeps the common
// cases terse.
struct SweepConfig {
  SweepConfig() = default;
  SweepConfig(SweepMode m) : mode(m) {}  // NOLINT(runtime/explicit)

  SweepMode mode = SweepMode::kRangeSum;
  // kDiskSpool only: directory for scratch files (empty = system temp) and
  // the in-memory target size of one row band.
  std::string spool_dir;
  std::uint64_t spool_band_bytes = 1ull << 30;
};

// Sweep-order instrumentation: counts configurations visited and any write
// landing on a configuration that was already read. The single-pass claim is
// exactly that the second number stays zero.
struct SweepStats {
  std::uint64_t cells_visited = 0;
  std::uint64_t write_after_read_violations = 0;
};

// Either the preflop base case (one way to reach stack S - SB facing
// BB - SB with a check allowed) or the previous round's continuing counts.
struct RoundSeed {
  static RoundSeed Preflop() { return RoundSeed{}; }
  static RoundSeed Carried(std::vector<Count> by_stack) {
    RoundSeed s;
    s.carried = std::move(by_stack);
    return s;
  }

  bool is_preflop() const { return !carried.has_value(); }
  std::optional<std::vector<Count>> carried;
};

// One dynamic-programming pass over the round's configurations, visiting
// check-allowed configurations first, then call-ends-round ones, stacks
// descending and bets ascending within each, so every update lands on a
// configuration not yet read and a single traversal suffices.
RoundTally RunRoundPass(const GameSpec& spec, int round, const RoundSeed& seed,
                        const SweepConfig& config = {},
                        SweepStats* stats = nullptr);

using RoundProgressFn =
    std::function<void(int round, const RoundTally& tally)>;

// Chains RunRoundPass over all rounds.
std::vector<RoundTally> CountNolimitGame(const GameSpec& spec,
                                         const SweepConfig& config = {},
                                         SweepStats* stats = nullptr,
                                         const RoundProgressFn& progress = {});

// Full no-limit report: betting tallies per round scaled by that round's
// deal counts. deals must carry canonical counts for every round.
SizeReport NolimitGameSize(const GameSpec& spec, const DealCounts& deals,
                           const SweepConfig& config = {},
                           const RoundProgressFn& progress = {});

}  // namespace gtcount

#endif  // GTCOUNT_NOLIMIT_COUNTER_HPP_
