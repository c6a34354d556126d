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

#include "gtcount/nolimit_counter.hpp"

#include <vector>

#include "gtest/gtest.h"

namespace gtcount {
namespace {

GameSpec SmallGame(int stack, int sb, int bb, int rounds, int ranks = 13) {
  GameSpec spec;
  spec.betting = BettingKind::kNoLimit;
  spec.small_blind = sb;
  spec.big_blind = bb;
  spec.stack_size = stack;
  spec.num_rounds = rounds;
  spec.board_cards.assign(rounds, 1);
  spec.board_cards[0] = 0;
  if (rounds > 1) spec.board_cards[1] = 3;
  spec.num_hole_cards = 2;
  spec.num_suits = 4;
  spec.num_ranks = ranks;
  spec.Validate();
  return spec;
}

TEST(LegalActions, RootOfTheDeepStackGame) {
  GameSpec spec = BuiltinGame("acpc-nl-2007");
  // SB has $999 behind and faces the $1 blind gap; raises run $2..$998.
  ActionMenu menu = LegalActions({0, 999, 1, true}, spec);
  EXPECT_TRUE(menu.fold_legal);
  EXPECT_EQ(menu.passive, ActionMenu::Passive::kCallContinues);
  EXPECT_EQ(menu.raise_min, 2);
  EXPECT_EQ(menu.raise_max, 998);
  EXPECT_FALSE(menu.allin_underraise.has_value());
  EXPECT_EQ(menu.num_actions(), 999);
}

TEST(LegalActions, FacingAllInLeavesFoldAndCall) {
  GameSpec spec = SmallGame(20, 1, 2, 2, 5);
  ActionMenu menu = LegalActions({0, 2, 2, false}, spec);
  EXPECT_TRUE(menu.fold_legal);
  EXPECT_EQ(menu.passive, ActionMenu::Passive::kCallAllIn);
  EXPECT_EQ(menu.num_raises(), 0);
  EXPECT_EQ(menu.num_actions(), 2);
}

TEST(LegalActions, PostflopOpener) {
  GameSpec spec = SmallGame(20, 1, 2, 2, 5);
  // $5 behind, nothing to call: check or bet $2..$5.
  ActionMenu menu = LegalActions({1, 5, 0, true}, spec);
  EXPECT_FALSE(menu.fold_legal);
  EXPECT_EQ(menu.passive, ActionMenu::Passive::kCheckContinues);
  EXPECT_EQ(menu.raise_min, 2);
  EXPECT_EQ(menu.raise_max, 5);
  EXPECT_EQ(menu.num_actions(), 5);
}

TEST(LegalActions, AllInBelowMinRaiseIsStillLegal) {
  GameSpec spec = SmallGame(20, 1, 2, 2, 5);
  // Facing $2 with $3 behind: calling leaves $1, below the $2 min-raise, but
  // the $1 shove is allowed.
  ActionMenu menu = LegalActions({0, 3, 2, false}, spec);
  EXPECT_TRUE(menu.fold_legal);
  ASSERT_TRUE(menu.allin_underraise.has_value());
  EXPECT_EQ(*menu.allin_underraise, 1);
  EXPECT_EQ(menu.num_raises(), 1);
  EXPECT_EQ(menu.num_actions(), 3);
}

TEST(LegalActions, RejectsInvalidConfigurations) {
  GameSpec spec = SmallGame(20, 1, 2, 2, 5);
  EXPECT_THROW(LegalActions({0, 5, 7, false}, spec), Error);   // b > m
  EXPECT_THROW(LegalActions({0, 25, 0, false}, spec), Error);  // m > stack
  EXPECT_THROW(LegalActions({0, 0, 0, false}, spec), Error);   // all-in actor
  EXPECT_THROW(LegalActions({5, 5, 0, true}, spec), Error);    // bad round
  // check_allowed somewhere other than an opener or the preflop base
  EXPECT_THROW(LegalActions({1, 5, 3, true}, spec), Error);
}

TEST(RunRoundPass, RoyalPreflopMatchesThePublishedRow) {
  GameSpec royal = BuiltinGame("royal-2-20");
  RoundTally t = RunRoundPass(royal, 0, RoundSeed::Preflop());
  EXPECT_EQ(t.decisions, Count(1188ul));
  EXPECT_EQ(t.infoset_actions, Count(3561ul));
  EXPECT_EQ(t.continuing_total, Count(1187ul));
  EXPECT_EQ(t.terminal, Count(1187ul));
}

TEST(RunRoundPass, RoyalFlopChainsFromPreflop) {
  GameSpec royal = BuiltinGame("royal-2-20");
  RoundTally preflop = RunRoundPass(royal, 0, RoundSeed::Preflop());
  RoundTally flop = RunRoundPass(
      royal, 1, RoundSeed::Carried(preflop.continuing_by_stack));
  EXPECT_EQ(flop.decisions, Count(19996ul));
  EXPECT_EQ(flop.infoset_actions, Count(57616ul));
  EXPECT_EQ(flop.terminal, Count(38807ul));
  EXPECT_EQ(flop.continuing_total, Count());
}

TEST(RunRoundPass, TinyStackGame) {
  // $1-$2 blinds with $2 stacks: the big blind is already all-in, so the
  // small blind's only decision is fold or call-all-in. The call carries
  // through the board rounds as a both-all-in history and ends the game in
  // the last round.
  GameSpec spec = SmallGame(2, 1, 2, 4);
  std::vector<RoundTally> rounds = CountNolimitGame(spec);
  EXPECT_EQ(rounds[0].decisions, Count(1ul));
  EXPECT_EQ(rounds[0].infoset_actions, Count(2ul));
  EXPECT_EQ(rounds[0].terminal, Count(1ul));  // the fold
  EXPECT_EQ(rounds[0].continuing_total, Count(1ul));
  EXPECT_EQ(rounds[0].continuing_by_stack[0], Count(1ul));
  EXPECT_EQ(rounds[1].decisions, Count());
  EXPECT_EQ(rounds[1].continuing_total, Count(1ul));
  EXPECT_EQ(rounds[2].decisions, Count());
  EXPECT_EQ(rounds[3].terminal, Count(1ul));  // all-in showdown
}

TEST(RunRoundPass, EqualBlindsAllInFromTheStart) {
  // Blinds equal to the stack: both players are all-in before anyone acts.
  GameSpec spec = SmallGame(2, 2, 2, 2, 5);
  std::vector<RoundTally> rounds = CountNolimitGame(spec);
  EXPECT_EQ(rounds[0].decisions, Count());
  EXPECT_EQ(rounds[0].continuing_total, Count(1ul));
  EXPECT_EQ(rounds[1].terminal, Count(1ul));
  EXPECT_EQ(rounds[1].decisions, Count());
}

TEST(RunRoundPass, SeedValidation) {
  GameSpec royal = BuiltinGame("royal-2-20");
  EXPECT_THROW(RunRoundPass(royal, 1, RoundSeed::Preflop()), Error);
  std::vector<Count> carried(royal.stack_size + 1);
  EXPECT_THROW(RunRoundPass(royal, 0, RoundSeed::Carried(carried)), Error);
  carried.resize(3);
  EXPECT_THROW(RunRoundPass(royal, 1, RoundSeed::Carried(carried)), Error);
}

TEST(SweepModes, DirectAndSpooledMatchRangeSum) {
  SweepConfig spool(SweepMode::kDiskSpool);
  spool.spool_dir = testing::TempDir();
  for (int stack : {3, 7, 12, 19, 26}) {
    for (auto [sb, bb] : {std::pair{1, 2}, std::pair{2, 4}}) {
      if (bb > stack) continue;
      GameSpec spec = SmallGame(stack, sb, bb, 3);
      std::vector<RoundTally> range = CountNolimitGame(spec);
      for (const SweepConfig& config :
           {SweepConfig(SweepMode::kDirect), spool}) {
        std::vector<RoundTally> other = CountNolimitGame(spec, config);
        ASSERT_EQ(range.size(), other.size());
        for (std::size_t r = 0; r < range.size(); ++r) {
          EXPECT_EQ(range[r].decisions, other[r].decisions)
              << "stack " << stack << " round " << r;
          EXPECT_EQ(range[r].infoset_actions, other[r].infoset_actions);
          EXPECT_EQ(range[r].terminal, other[r].terminal);
          EXPECT_EQ(range[r].continuing_by_stack,
                    other[r].continuing_by_stack);
        }
      }
    }
  }
}

TEST(SweepModes, SpooledReproducesThe2009Game) {
  GameSpec spec = BuiltinGame("acpc-nl-2009");
  SweepConfig spool(SweepMode::kDiskSpool);
  spool.spool_dir = testing::TempDir();
  spool.spool_band_bytes = 1 << 20;  // force many bands
  std::vector<RoundTally> range = CountNolimitGame(spec);
  std::vector<RoundTally> spooled = CountNolimitGame(spec, spool);
  for (std::size_t r = 0; r < range.size(); ++r) {
    EXPECT_EQ(range[r].decisions, spooled[r].decisions) << "round " << r;
    EXPECT_EQ(range[r].infoset_actions, spooled[r].infoset_actions);
    EXPECT_EQ(range[r].terminal, spooled[r].terminal);
    EXPECT_EQ(range[r].continuing_by_stack, spooled[r].continuing_by_stack);
  }
}

TEST(SweepOrder, NoWriteEverLandsOnAVisitedConfiguration) {
  SweepConfig spool(SweepMode::kDiskSpool);
  spool.spool_dir = testing::TempDir();
  for (int stack : {2, 5, 11, 20, 33, 40}) {
    for (const SweepConfig& config :
         {SweepConfig(SweepMode::kRangeSum), SweepConfig(SweepMode::kDirect),
          spool}) {
      GameSpec spec = SmallGame(stack, 1, 2, 4);
      SweepStats stats;
      CountNolimitGame(spec, config, &stats);
      EXPECT_EQ(stats.write_after_read_violations, 0u) << "stack " << stack;
      EXPECT_GT(stats.cells_visited, 0u);
    }
  }
}

// Every history entering a round leaves it exactly once: seeds plus action
// edges balance decisions plus endpoints.
TEST(RoundFlow, SeedsPlusActionsEqualDecisionsPlusEndpoints) {
  for (int stack : {2, 3, 8, 17, 29, 41, 50}) {
    GameSpec spec = SmallGame(stack, 1, 2, 4);
    std::vector<RoundTally> rounds = CountNolimitGame(spec);
    Count incoming(1ul);
    for (const RoundTally& t : rounds) {
      EXPECT_EQ(incoming + t.infoset_actions,
                t.decisions + t.continuing_total + t.terminal)
          << "stack " << stack;
      incoming = t.continuing_total;
    }
  }
}

DealCounts RoyalDeals() {
  GameSpec royal = BuiltinGame("royal-2-20");
  DealCounts deals = ComputeDealCounts(royal);
  deals.rounds[0].canonical_one_player = Count(25ul);
  deals.rounds[1].canonical_one_player = Count(7760ul);
  return deals;
}

TEST(NolimitGameSize, RoyalReportMatchesEveryPublishedCell) {
  GameSpec royal = BuiltinGame("royal-2-20");
  SizeReport report = NolimitGameSize(royal, RoyalDeals());

  auto sci = [](const Count& c) { return c.ToScientific(6); };

  const auto& bet = report.blocks[kBettingSequences];
  EXPECT_EQ(bet[0].primary, Count(1188ul));
  EXPECT_EQ(bet[0].actions, Count(3561ul));
  EXPECT_EQ(bet[0].continuing, Count(1187ul));
  EXPECT_EQ(bet[0].terminal, Count(1187ul));
  EXPECT_EQ(bet[1].primary, Count(19996ul));
  EXPECT_EQ(report.totals[kBettingSequences].primary, Count(21184ul));
  EXPECT_EQ(report.totals[kBettingSequences].actions, Count(61177ul));
  EXPECT_EQ(report.totals[kBettingSequences].terminal, Count(39994ul));

  const auto& canon = report.blocks[kOneSidedCanonical];
  EXPECT_EQ(canon[0].primary, Count(29700ul));
  EXPECT_EQ(canon[0].actions, Count(89025ul));
  EXPECT_EQ(canon[0].continuing, Count(29675ul));
  EXPECT_EQ(sci(canon[1].primary), "1.55169e8");
  EXPECT_EQ(sci(canon[1].actions), "4.471e8");
  EXPECT_EQ(sci(canon[1].terminal), "3.01142e8");
  EXPECT_EQ(sci(report.totals[kOneSidedCanonical].primary), "1.55199e8");
  EXPECT_EQ(sci(report.totals[kOneSidedCanonical].actions), "4.47189e8");
  EXPECT_EQ(sci(report.totals[kOneSidedCanonical].terminal), "3.01172e8");

  const auto& one = report.blocks[kOneSided];
  EXPECT_EQ(one[0].primary, Count(225720ul));
  EXPECT_EQ(one[0].actions, Count(676590ul));
  EXPECT_EQ(one[0].continuing, Count(225530ul));
  EXPECT_EQ(sci(one[1].primary), "3.10018e9");
  EXPECT_EQ(sci(one[1].actions), "8.93278e9");
  EXPECT_EQ(sci(one[1].terminal), "6.01664e9");
  EXPECT_EQ(sci(report.totals[kOneSided].primary), "3.10041e9");
  EXPECT_EQ(sci(report.totals[kOneSided].actions), "8.93346e9");
  EXPECT_EQ(sci(report.totals[kOneSided].terminal), "6.01686e9");

  const auto& two = report.blocks[kTwoSided];
  EXPECT_EQ(sci(two[0].primary), "3.45352e7");
  EXPECT_EQ(sci(two[0].actions), "1.03518e8");
  EXPECT_EQ(sci(two[0].continuing), "3.45061e7");
  EXPECT_EQ(sci(two[1].primary), "3.25519e11");
  EXPECT_EQ(sci(two[1].actions), "9.37942e11");
  EXPECT_EQ(sci(two[1].terminal), "6.31747e11");
  EXPECT_EQ(sci(report.totals[kTwoSided].primary), "3.25553e11");
  EXPECT_EQ(sci(report.totals[kTwoSided].terminal), "6.31781e11");
  EXPECT_EQ(report.game_states(), Count::FromDecimal("325553418360"));
}

TEST(NolimitGameSize, The2009PreciseCounts) {
  GameSpec spec = BuiltinGame("acpc-nl-2009");
  DealCounts deals = ComputeDealCounts(spec);
  CanonicalCache cache;
  cache.LoadFile(std::string(GTCOUNT_TEST_DATA_DIR) + "/canonical_counts.txt");
  for (int r = 0; r < 4; ++r) {
    deals.rounds[r].canonical_one_player = *cache.Lookup(spec, r);
  }
  SizeReport report = NolimitGameSize(spec, deals);
  EXPECT_EQ(report.game_states(),
            Count::FromDecimal(
                "1375203442350500983963565602824903351778252845259200"));
  EXPECT_EQ(report.information_sets(),
            Count::FromDecimal(
                "1389094358906842392181537788403345780331801813952"));
  EXPECT_EQ(report.canonical_infoset_actions(),
            Count::FromDecimal(
                "180091019297791288982204479657796281550065385037"));
}

}  // namespace
}  // namespace gtcount
