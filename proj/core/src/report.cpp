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

#include "gtcount/report.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace gtcount {

namespace {

const char* const kBlockTitles[kNumBlocks] = {
    "Betting Sequences", "One-Sided Canonical", "One-Sided", "Two-Sided"};
const char* const kBlockKeys[kNumBlocks] = {
    "betting_sequences", "one_sided_canonical", "one_sided", "two_sided"};
const char* const kPrimaryNames[kNumBlocks] = {"Sequences", "Infosets",
                                               "Infosets", "States"};
const char* const kPrimaryKeys[kNumBlocks] = {"sequences", "infosets",
                                              "infosets", "states"};

}  // namespace

std::string RoundName(int round) {
  static const char* const kNames[] = {"Preflop", "Flop", "Turn", "River"};
  if (round >= 0 && round < 4) return kNames[round];
  return "Round " + std::to_string(round + 1);
}

BinaryUnit ToBinaryUnits(const Count& bytes) {
  static const char* const kUnits[] = {"B",   "KiB", "MiB", "GiB", "TiB",
                                       "PiB", "EiB", "ZiB", "YiB"};
  int prefix = 0;
  for (int k = 8; k >= 1; --k) {
    if (bytes >= Count::PowerOfTwo(10ul * k)) {
      prefix = k;
      break;
    }
  }
  if (prefix == 0) return {bytes, kUnits[0]};
  return {bytes.CeilDiv(Count::PowerOfTwo(10ul * prefix)), kUnits[prefix]};
}

MemoryEstimate MemoryEstimates(const Count& canonical_infoset_actions) {
  // One byte per infoset-action stores a behavioral strategy; CFR keeps two
  // 8-byte doubles per infoset-action (regret and average strategy).
  return {canonical_infoset_actions, canonical_infoset_actions * 16ul};
}

void SizeReport::Validate() const {
  auto fail = [](const std::string& msg) {
    throw Error("inconsistent size report: " + msg);
  };
  const std::size_t n = raw.size();
  if (n == 0) fail("no rounds");
  if (deals.rounds.size() != n || round_names.size() != n) {
    fail("round count mismatch");
  }
  for (int blk = 0; blk < kNumBlocks; ++blk) {
    if (blocks[blk].size() != n) fail("round count mismatch");
    ReportCells sum;
    for (const ReportCells& c : blocks[blk]) {
      sum.primary += c.primary;
      sum.actions += c.actions;
      sum.continuing += c.continuing;
      sum.terminal += c.terminal;
    }
    if (sum.primary != totals[blk].primary ||
        sum.actions != totals[blk].actions ||
        sum.continuing != totals[blk].continuing ||
        sum.terminal != totals[blk].terminal) {
      fail(std::string("totals do not sum in block ") + kBlockKeys[blk]);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    const ReportCells& canon = blocks[kOneSidedCanonical][r];
    const ReportCells& one = blocks[kOneSided][r];
    const ReportCells& two = blocks[kTwoSided][r];
    if (one.primary < canon.primary || one.actions < canon.actions ||
        one.continuing < canon.continuing || one.terminal < canon.terminal) {
      fail("one-sided cell below canonical cell");
    }
    if (two.primary < one.primary || two.actions < one.actions ||
        two.continuing < one.continuing || two.terminal < one.terminal) {
      fail("two-sided cell below one-sided cell");
    }
  }
  // Cross-module identity: information sets re-derive from the raw betting
  // tallies and the deal counts.
  Count expect_infosets;
  for (std::size_t r = 0; r < n; ++r) {
    expect_infosets += raw[r].decisions * deals.rounds[r].one_player;
  }
  if (expect_infosets != information_sets()) {
    fail("one-sided infoset total does not re-derive from raw tallies");
  }
  const MemoryEstimate expect_mem = MemoryEstimates(canonical_infoset_actions());
  if (expect_mem.strategy_bytes != memory.strategy_bytes ||
      expect_mem.cfr_bytes != memory.cfr_bytes) {
    fail("memory estimate does not match canonical infoset-actions");
  }
}

SizeReport BuildSizeReport(const GameSpec& spec, std::string game_label,
                           std::vector<RawRoundTally> raw,
                           const DealCounts& deals) {
  const std::size_t n = raw.size();
  if (n != static_cast<std::size_t>(spec.num_rounds) ||
      deals.rounds.size() != n) {
    throw Error("BuildSizeReport: round count mismatch");
  }
  SizeReport report;
  report.spec = spec;
  report.game_label = std::move(game_label);
  report.raw = std::move(raw);
  report.deals = deals;
  for (std::size_t r = 0; r < n; ++r) {
    report.round_names.push_back(RoundName(static_cast<int>(r)));
    if (!deals.rounds[r].canonical_one_player) {
      throw Error("BuildSizeReport: canonical deal count missing for round " +
                  std::to_string(r) +
                  " (compute it or load the canonical cache)");
    }
  }

  for (int blk = 0; blk < kNumBlocks; ++blk) {
    for (std::size_t r = 0; r < n; ++r) {
      const DealCounts::Round& deal = deals.rounds[r];
      Count mult = Count(1ul);
      if (blk == kOneSidedCanonical) mult = *deal.canonical_one_player;
      if (blk == kOneSided) mult = deal.one_player;
      if (blk == kTwoSided) mult = deal.two_player;
      const RawRoundTally& t = report.raw[r];
      ReportCells cells{t.decisions * mult, t.actions * mult,
                        t.continuing * mult, t.terminal * mult};
      report.totals[blk].primary += cells.primary;
      report.totals[blk].actions += cells.actions;
      report.totals[blk].continuing += cells.continuing;
      report.totals[blk].terminal += cells.terminal;
      report.blocks[blk].push_back(std::move(cells));
    }
  }
  report.memory = MemoryEstimates(report.canonical_infoset_actions());
  report.Validate();
  return report;
}

namespace {

std::string EmitText(const SizeReport& report, int sig_digits) {
  std::ostringstream out;
  out << "Game: " << report.game_label << "\n\n";

  auto cell = [&](const Count& c) { return c.ToScientific(sig_digits); };
  const int name_w = 9;
  const int col_w = 15;
  for (int blk = 0; blk < kNumBlocks; ++blk) {
    out << kBlockTitles[blk] << "\n";
    out << "  " << std::left << std::setw(name_w) << "Round" << std::right
        << std::setw(col_w) << kPrimaryNames[blk] << std::setw(col_w)
        << "Actions" << std::setw(col_w) << "Continuing" << std::setw(col_w)
        << "Terminal" << "\n";
    for (std::size_t r = 0; r < report.blocks[blk].size(); ++r) {
      const ReportCells& c = report.blocks[blk][r];
      out << "  " << std::left << std::setw(name_w) << report.round_names[r]
          << std::right << std::setw(col_w) << cell(c.primary)
          << std::setw(col_w) << cell(c.actions) << std::setw(col_w)
          << cell(c.continuing) << std::setw(col_w) << cell(c.terminal)
          << "\n";
    }
    const ReportCells& t = report.totals[blk];
    out << "  " << std::left << std::setw(name_w) << "Total" << std::right
        << std::setw(col_w) << cell(t.primary) << std::setw(col_w)
        << cell(t.actions) << std::setw(col_w) << "" << std::setw(col_w)
        << cell(t.terminal) << "\n\n";
  }

  out << "Precise counts:\n";
  out << "  Game states:               "
      << report.game_states().ToDecimal(true) << "\n";
  out << "  Information sets:          "
      << report.information_sets().ToDecimal(true) << "\n";
  out << "  Canonical infoset-actions: "
      << report.canonical_infoset_actions().ToDecimal(true) << "\n\n";

  const BinaryUnit strat = ToBinaryUnits(report.memory.strategy_bytes);
  const BinaryUnit cfr = ToBinaryUnits(report.memory.cfr_bytes);
  out << "Memory estimates (1 B / 16 B per canonical infoset-action):\n";
  out << "  Behavioral strategy: " << strat.value.ToDecimal(true) << " "
      << strat.unit << "\n";
  out << "  CFR solve (RAM):     " << cfr.value.ToDecimal(true) << " "
      << cfr.unit << "\n";
  return out.str();
}

std::string LowerName(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string EmitCsv(const SizeReport& report) {
  std::ostringstream out;
  out << "block,round,column,value\n";
  for (int blk = 0; blk < kNumBlocks; ++blk) {
    auto row = [&](const std::string& round, const ReportCells& c,
                   bool with_continuing) {
      out << kBlockKeys[blk] << "," << round << "," << kPrimaryKeys[blk] << ","
          << c.primary.ToDecimal() << "\n";
      out << kBlockKeys[blk] << "," << round << ",actions,"
          << c.actions.ToDecimal() << "\n";
      if (with_continuing) {
        out << kBlockKeys[blk] << "," << round << ",continuing,"
            << c.continuing.ToDecimal() << "\n";
      }
      out << kBlockKeys[blk] << "," << round << ",terminal,"
          << c.terminal.ToDecimal() << "\n";
    };
    for (std::size_t r = 0; r < report.blocks[blk].size(); ++r) {
      row(LowerName(report.round_names[r]), report.blocks[blk][r], true);
    }
    row("total", report.totals[blk], false);
  }
  out << "memory,,strategy_bytes," << report.memory.strategy_bytes.ToDecimal()
      << "\n";
  out << "memory,,cfr_bytes," << report.memory.cfr_bytes.ToDecimal() << "\n";
  return out.str();
}

std::string EmitJson(const SizeReport& report) {
  nlohmann::ordered_json j;
  j["game"]["label"] = report.game_label;
  j["game"]["definition"] = RenderGameFile(report.spec);

  for (int blk = 0; blk < kNumBlocks; ++blk) {
    nlohmann::ordered_json& b = j["blocks"][kBlockKeys[blk]];
    auto fill = [&](nlohmann::ordered_json& dst, const ReportCells& c) {
      dst[kPrimaryKeys[blk]] = c.primary.ToDecimal();
      dst["actions"] = c.actions.ToDecimal();
      dst["continuing"] = c.continuing.ToDecimal();
      dst["terminal"] = c.terminal.ToDecimal();
    };
    for (std::size_t r = 0; r < report.blocks[blk].size(); ++r) {
      fill(b[LowerName(report.round_names[r])], report.blocks[blk][r]);
    }
    fill(b["total"], report.totals[blk]);
  }

  j["precise_counts"]["game_states"] = report.game_states().ToDecimal();
  j["precise_counts"]["information_sets"] =
      report.information_sets().ToDecimal();
  j["precise_counts"]["canonical_infoset_actions"] =
      report.canonical_infoset_actions().ToDecimal();

  const BinaryUnit strat = ToBinaryUnits(report.memory.strategy_bytes);
  const BinaryUnit cfr = ToBinaryUnits(report.memory.cfr_bytes);
  j["memory"]["strategy_bytes"] = report.memory.strategy_bytes.ToDecimal();
  j["memory"]["strategy"] = strat.value.ToDecimal() + " " + strat.unit;
  j["memory"]["cfr_bytes"] = report.memory.cfr_bytes.ToDecimal();
  j["memory"]["cfr"] = cfr.value.ToDecimal() + " " + cfr.unit;
  return j.dump(2) + "\n";
}

}  // namespace

std::string Emit(const SizeReport& report, EmitFormat format, int sig_digits) {
  report.Validate();
  switch (format) {
    case EmitFormat::kText:
      return EmitText(report, sig_digits);
    case EmitFormat::kCsv:
      return EmitCsv(report);
    case EmitFormat::kJson:
      return EmitJson(report);
  }
  throw Error("unknown emit format");
}

}  // namespace gtcount
