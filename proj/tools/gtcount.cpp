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

// Command line interface: `gtcount size` computes the full report for a
// game, `gtcount cards` prints or regenerates deal counts, and
// `gtcount oracle` cross-checks the dynamic program against the brute-force
// betting walk on games small enough to walk.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gtcount/cards.hpp"
#include "gtcount/gamespec.hpp"
#include "gtcount/limit_counter.hpp"
#include "gtcount/nolimit_counter.hpp"
#include "gtcount/oracle.hpp"
#include "gtcount/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // bad flags, bad files, invalid games
constexpr int kExitMismatch = 2;  // internal cross-check failed

struct GameSelection {
  std::string file;
  std::string builtin;
};

void AddGameFlags(CLI::App* cmd, GameSelection* sel) {
  auto* game = cmd->add_option("--game", sel->file, "game definition file");
  auto* builtin =
      cmd->add_option("--builtin", sel->builtin, "built-in game name");
  game->excludes(builtin);
}

gtcount::GameSpec LoadSelectedGame(const GameSelection& sel,
                                   std::string* label) {
  if (!sel.builtin.empty()) {
    *label = sel.builtin;
    return gtcount::BuiltinGame(sel.builtin);
  }
  if (!sel.file.empty()) {
    *label = sel.file;
    return gtcount::LoadGameFile(sel.file);
  }
  throw gtcount::Error("specify a game with --game FILE or --builtin NAME");
}

// Fills canonical deal counts from the cache file or by enumeration.
void FillCanonical(const gtcount::GameSpec& spec, gtcount::DealCounts* deals,
                   bool compute, const std::string& cache_path, int threads) {
  if (compute) {
    for (int r = 0; r < spec.num_rounds; ++r) {
      deals->rounds[r].canonical_one_player =
          gtcount::CanonicalCount(spec, r, threads);
    }
    return;
  }
  const std::string path = gtcount::ResolveCachePath(cache_path);
  gtcount::CanonicalCache cache;
  cache.LoadFile(path);
  for (int r = 0; r < spec.num_rounds; ++r) {
    auto hit = cache.Lookup(spec, r);
    if (!hit) {
      throw gtcount::Error(
          "no canonical count cached for round " + std::to_string(r) +
          " (key '" + gtcount::CanonicalCache::KeyFor(spec, r) + "' in " +
          path + "); rerun with --canonical compute or regenerate the cache " +
          "with `gtcount cards --compute --write-cache`");
    }
    deals->rounds[r].canonical_one_player = *hit;
  }
}

int RunSize(const GameSelection& sel, const std::string& format,
            const std::string& canonical_mode, const std::string& out_path,
            const std::string& cache_path, int sig_digits, bool progress,
            int threads, bool spool, const std::string& spool_dir) {
  std::string label;
  gtcount::GameSpec spec = LoadSelectedGame(sel, &label);
  label += " (" + gtcount::DescribeGame(spec) + ")";

  gtcount::DealCounts deals = gtcount::ComputeDealCounts(spec);
  FillCanonical(spec, &deals, canonical_mode == "compute", cache_path,
                threads);

  gtcount::RoundProgressFn on_round;
  if (progress) {
    on_round = [](int round, const gtcount::RoundTally& tally) {
      std::cerr << "  " << gtcount::RoundName(round) << ": "
                << tally.decisions.ToScientific() << " decision sequences\n";
    };
  }

  gtcount::SweepConfig sweep;
  if (spool) {
    sweep.mode = gtcount::SweepMode::kDiskSpool;
    sweep.spool_dir = spool_dir;
  }
  gtcount::SizeReport report =
      spec.is_limit() ? gtcount::LimitGameSize(spec, deals)
                      : gtcount::NolimitGameSize(spec, deals, sweep, on_round);
  report.game_label = label;

  gtcount::EmitFormat fmt = gtcount::EmitFormat::kText;
  if (format == "csv") fmt = gtcount::EmitFormat::kCsv;
  if (format == "json") fmt = gtcount::EmitFormat::kJson;
  const std::string rendered = gtcount::Emit(report, fmt, sig_digits);

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) throw gtcount::Error("cannot write output file: " + out_path);
    out << rendered;
  }
  return kExitOk;
}

int RunCards(const GameSelection& sel, int round, bool verify, bool compute,
             const std::string& write_cache, const std::string& cache_path,
             int threads) {
  std::string label;
  gtcount::GameSpec spec = LoadSelectedGame(sel, &label);
  gtcount::DealCounts deals = gtcount::ComputeDealCounts(spec);

  gtcount::CanonicalCache cache;
  bool have_cache = false;
  try {
    cache.LoadFile(gtcount::ResolveCachePath(cache_path));
    have_cache = true;
  } catch (const gtcount::Error&) {
    // No cache available; canonical columns show only computed values.
  }

  int first = 0, last = spec.num_rounds - 1;
  if (round >= 0) {
    if (round >= spec.num_rounds) {
      throw gtcount::Error("round out of range: " + std::to_string(round));
    }
    first = last = round;
  }

  int exit_code = kExitOk;
  std::cout << "Deal counts for " << label << " ("
            << gtcount::DescribeGame(spec) << ")\n";
  std::cout << "round        two-player           one-player           "
               "canonical\n";
  for (int r = first; r <= last; ++r) {
    const auto& d = deals.rounds[r];
    std::optional<gtcount::Count> cached =
        have_cache ? cache.Lookup(spec, r) : std::nullopt;
    std::optional<gtcount::Count> computed;
    if (compute || verify) {
      if (verify && !cached) {
        std::cerr << "round " << r << ": nothing cached to verify against\n";
        exit_code = std::max(exit_code, kExitUsage);
      }
      computed = gtcount::CanonicalCount(spec, r, threads);
      if (verify && cached && *cached != *computed) {
        std::cerr << "round " << r << ": cache says "
                  << cached->ToDecimal() << " but enumeration found "
                  << computed->ToDecimal() << "\n";
        exit_code = kExitMismatch;
      }
      cache.Put(spec, r, *computed);
    }
    const std::optional<gtcount::Count>& canonical =
        computed ? computed : cached;
    std::cout << std::left << std::setw(10) << gtcount::RoundName(r) << "   "
              << std::setw(20) << d.two_player.ToDecimal() << " "
              << std::setw(20) << d.one_player.ToDecimal() << " "
              << (canonical ? canonical->ToDecimal() : std::string("-"));
    if (computed && cached) {
      std::cout << (*computed == *cached ? "  (cache ok)" : "  (CACHE STALE)");
    }
    std::cout << "\n";
  }

  if (!write_cache.empty()) {
    if (!compute && !verify) {
      throw gtcount::Error("--write-cache needs --compute or --verify");
    }
    cache.SaveFile(write_cache);
    std::cout << "wrote " << write_cache << "\n";
  }
  return exit_code;
}

void PrintTallyTable(const std::vector<gtcount::RoundTally>& rounds) {
  std::cout << "round        decisions        actions         terminal"
               "        continuing\n";
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    const auto& t = rounds[r];
    std::cout << std::left << std::setw(10) << gtcount::RoundName(r) << "   "
              << std::setw(16) << t.decisions.ToDecimal() << " "
              << std::setw(15) << t.infoset_actions.ToDecimal() << " "
              << std::setw(15) << t.terminal.ToDecimal() << " "
              << t.continuing_total.ToDecimal() << "\n";
  }
}

int RunOracle(const GameSelection& sel, std::uint64_t max_nodes) {
  std::string label;
  gtcount::GameSpec spec = LoadSelectedGame(sel, &label);

  gtcount::OracleResult walked =
      gtcount::WalkBetting(spec, {.max_nodes = max_nodes});
  std::cout << "Brute-force walk of " << label << " ("
            << walked.nodes_visited << " nodes)\n";
  PrintTallyTable(walked.rounds);

  bool match = true;
  if (spec.is_limit()) {
    for (int r = 0; r < spec.num_rounds; ++r) {
      gtcount::LimitRoundProfile p = gtcount::EnumerateLimitRound(
          spec.max_bets[r], r == 0, r == spec.num_rounds - 1);
      const gtcount::RoundTally& w = walked.rounds[r];
      match &= p.decisions == w.decisions &&
               p.decision_actions == w.infoset_actions &&
               p.continuing == w.continuing_total && p.terminal == w.terminal;
    }
    std::cout << (match ? "limit counter == oracle\n"
                        : "limit counter != oracle\n");
  } else {
    std::vector<gtcount::RoundTally> dp = gtcount::CountNolimitGame(spec);
    for (int r = 0; r < spec.num_rounds; ++r) {
      const gtcount::RoundTally& a = dp[r];
      const gtcount::RoundTally& b = walked.rounds[r];
      match &= a.decisions == b.decisions &&
               a.infoset_actions == b.infoset_actions &&
               a.terminal == b.terminal &&
               a.continuing_total == b.continuing_total &&
               a.continuing_by_stack == b.continuing_by_stack;
    }
    std::cout << (match ? "DP == oracle\n" : "DP != oracle\n");
  }
  return match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gtcount: exact game-state, information-set and infoset-action counts "
      "for heads-up poker games"};
  app.require_subcommand(1);

  // size
  auto* size = app.add_subcommand(
      "size", "compute the full size report for a game");
  GameSelection size_sel;
  AddGameFlags(size, &size_sel);
  std::string format = "text";
  size->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  std::string canonical_mode = "cache";
  size->add_option("--canonical", canonical_mode,
                   "canonical deal counts: from the cache file or recomputed")
      ->check(CLI::IsMember({"cache", "compute"}));
  std::string out_path;
  size->add_option("--out", out_path, "write the report to a file");
  std::string size_cache;
  size->add_option("--cache", size_cache,
                   "canonical-count cache file (default: "
                   "$GTCOUNT_CANONICAL_CACHE or the installed file)");
  int sig_digits = 6;
  size->add_option("--sig", sig_digits, "significant digits in text tables")
      ->check(CLI::Range(1, 50));
  bool progress = false;
  size->add_flag("--progress", progress, "report per-round progress on stderr");
  int size_threads = 0;
  size->add_option("--threads", size_threads,
                   "threads for canonical enumeration (0 = all cores)");
  bool spool = false;
  size->add_flag("--spool", spool,
                 "spool the lattice to scratch files; lets very deep stacks "
                 "(e.g. $20000) run in a few GB of RAM");
  std::string spool_dir;
  size->add_option("--spool-dir", spool_dir,
                   "scratch directory for --spool (default: system temp)");

  // cards
  auto* cards = app.add_subcommand(
      "cards", "print or regenerate per-round deal counts");
  GameSelection cards_sel;
  AddGameFlags(cards, &cards_sel);
  int round = -1;
  cards->add_option("--round", round, "restrict to one round (0-based)");
  bool verify = false;
  cards->add_flag("--verify", verify,
                  "recompute canonical counts and compare with the cache");
  bool compute = false;
  cards->add_flag("--compute", compute,
                  "enumerate canonical counts (slow for big decks)");
  std::string write_cache;
  cards->add_option("--write-cache", write_cache,
                    "write computed counts to this cache file");
  std::string cards_cache;
  cards->add_option("--cache", cards_cache, "canonical-count cache file");
  int threads = 0;
  cards->add_option("--threads", threads,
                    "threads for canonical enumeration (0 = all cores)");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "walk the betting tree and diff against the dynamic program");
  GameSelection oracle_sel;
  AddGameFlags(oracle, &oracle_sel);
  std::uint64_t max_nodes = 1'000'000'000;
  oracle->add_option("--max-nodes", max_nodes,
                     "refuse walks estimated above this many nodes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (size->parsed()) {
      return RunSize(size_sel, format, canonical_mode, out_path, size_cache,
                     sig_digits, progress, size_threads, spool, spool_dir);
    }
    if (cards->parsed()) {
      return RunCards(cards_sel, round, verify, compute, write_cache,
                      cards_cache, threads);
    }
    if (oracle->parsed()) {
      return RunOracle(oracle_sel, max_nodes);
    }
  } catch (const gtcount::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
