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

#ifndef GTCOUNT_REPORT_HPP_
#define GTCOUNT_REPORT_HPP_

#include <array>
#include <string>
#include <vector>

#include "gtcount/cards.hpp"
#include "gtcount/count.hpp"
#include "gtcount/gamespec.hpp"

namespace gtcount {

// Betting tallies for one round, with histories reaching the round counted
// cumulatively (earlier rounds' branching included).
struct RawRoundTally {
  Count decisions;
  Count actions;
  Count continuing;
  Count terminal;
};

// The four report blocks: raw betting sequences, then the same tallies
// scaled by the canonical one-player, one-player, and two-player deal counts.
enum ReportBlock {
  kBettingSequences = 0,
  kOneSidedCanonical = 1,
  kOneSided = 2,
  kTwoSided = 3,
};
inline constexpr int kNumBlocks = 4;

struct ReportCells {
  Count primary;  // sequences / infosets / states, depending on the block
  Count actions;
  Count continuing;
  Count terminal;
};

struct MemoryEstimate {
  Count strategy_bytes;  // one byte per canonical infoset-action
  Count cfr_bytes;       // two 8-byte doubles per canonical infoset-action
};

// A byte count scaled to a binary unit prefix (KiB = 2^10 B, ... up to YiB).
struct BinaryUnit {
  Count value;
  std::string unit;
};

// Scales to the largest binary prefix with value >= 1, capped at YiB, and
// rounds up: a computation needing 32.6 TiB is reported as 33 TiB.
BinaryUnit ToBinaryUnits(const Count& bytes);

MemoryEstimate MemoryEstimates(const Count& canonical_infoset_actions);

// The four-block size table plus totals and memory estimates, in the layout
// of the report tables.
struct SizeReport {
  GameSpec spec;
  std::string game_label;
  std::vector<std::string> round_names;

  std::array<std::vector<ReportCells>, kNumBlocks> blocks;
  std::array<ReportCells, kNumBlocks> totals;
  MemoryEstimate memory;

  // Inputs retained so emitters can re-check the assembly independently.
  std::vector<RawRoundTally> raw;
  DealCounts deals;

  const Count& game_states() const { return totals[kTwoSided].primary; }
  const Count& information_sets() const { return totals[kOneSided].primary; }
  const Count& canonical_infoset_actions() const {
    return totals[kOneSidedCanonical].actions;
  }

  // Checks the structural invariants: every total is the sum of its column,
  // one-sided dominates canonical cellwise, two-sided dominates one-sided,
  // and the one-sided infoset total re-derives from raw decisions and deal
  // counts. Throws Error on any violation.
  void Validate() const;
};

// Assembles the report from per-round cumulative tallies and deal counts.
// deals must carry canonical counts for every round. Validates before
// returning.
SizeReport BuildSizeReport(const GameSpec& spec, std::string game_label,
                           std::vector<RawRoundTally> raw,
                           const DealCounts& deals);

enum class EmitFormat { kText, kCsv, kJson };

// Renders the report. Text lays out the four blocks in scientific notation
// (sig_digits significant digits) with a precise-count footer; CSV emits one
// row per (block, round, column) and JSON nests blocks -> rounds -> columns,
// both with full decimal strings, never floats. Re-runs the cross-module
// consistency check before rendering.
std::string Emit(const SizeReport& report, EmitFormat format,
                 int sig_digits = 6);

// Preflop/Flop/Turn/River for the first four rounds, "Round N" past that.
std::string RoundName(int round);

}  // namespace gtcount

#endif  // GTCOUNT_REPORT_HPP_
