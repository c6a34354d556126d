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

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gtcount {

void BettingConfig::Validate(const GameSpec& spec) const {
  auto fail = [&](const std::string& msg) {
    throw Error("invalid betting configuration (round " +
                std::to_string(round) + ", stack " + std::to_string(stack) +
                ", bet " + std::to_string(bet_faced) + "): " + msg);
  };
  if (round < 0 || round >= spec.num_rounds) fail("round out of range");
  if (stack < 1 || stack > spec.stack_size) fail("stack out of range");
  if (bet_faced < 0 || bet_faced > stack) fail("bet exceeds stack");
  if (check_allowed) {
    // Only round openers and the preflop blind-facing base keep the round
    // open after a passive action.
    const int blind_gap = spec.big_blind - spec.small_blind;
    const bool preflop_base =
        round == 0 && stack == spec.stack_size - spec.small_blind &&
        bet_faced == blind_gap;
    if (!preflop_base && bet_faced != 0) {
      fail("check_allowed requires a round opener or the preflop base");
    }
  }
}

ActionMenu LegalActions(const BettingConfig& cfg, const GameSpec& spec) {
  if (spec.betting != BettingKind::kNoLimit) {
    throw Error("LegalActions applies to no-limit games");
  }
  cfg.Validate(spec);

  const int m = cfg.stack;
  const int b = cfg.bet_faced;

  ActionMenu menu;
  menu.fold_legal = b > 0;
  if (m == b) {
    menu.passive = ActionMenu::Passive::kCallAllIn;
  } else if (cfg.check_allowed) {
    menu.passive = b == 0 ? ActionMenu::Passive::kCheckContinues
                          : ActionMenu::Passive::kCallContinues;
  } else {
    menu.passive = ActionMenu::Passive::kPassiveEndsRound;
  }
  if (b < m) {
    const int nominal_min = std::max(b, spec.big_blind);
    const int all_in = m - b;
    if (all_in >= nominal_min) {
      menu.raise_min = nominal_min;
      menu.raise_max = all_in;
    } else {
      menu.allin_underraise = all_in;
    }
  }
  return menu;
}

namespace {

// Range-start markers spooled to banded scratch files, for games whose
// marker storage does not fit in memory.
//
// During the sweep, row d receives at most one marker per source row, source
// rows descending, so markers arrive with non-increasing columns (seed-phase
// and own-row contributions are kept out of the spool; see RoundPass). Rows
// are grouped into bands of bounded size; each band's markers are appended
// to one file while higher bands are swept, then read back and bucketed
// per row just before the band itself is swept, so at most one band of
// markers is ever resident.
class DiffSpool {
 private:
  struct RowBucket {
    std::string bytes;
    std::vector<std::uint32_t> offsets;
    void swap(RowBucket& o) {
      bytes.swap(o.bytes);
      offsets.swap(o.offsets);
    }
  };

 public:
  DiffSpool(int stack_size, const std::string& dir,
            std::uint64_t band_bytes) {
    namespace fs = std::filesystem;
    dir_ = dir.empty() ? fs::temp_directory_path().string() : dir;
    fs::create_directories(dir_);

    // Row d receives at most (stack_size - d) markers plus a couple of
    // specials; size bands by a conservative per-marker byte estimate.
    constexpr std::uint64_t kBytesPerMarker = 5 + 8 * 10;
    if (band_bytes < (1u << 20)) band_bytes = 1u << 20;
    band_of_row_.assign(stack_size + 1, 0);
    std::uint64_t acc = 0;
    int band = 0;
    int band_hi = stack_size;
    for (int d = stack_size; d >= 0; --d) {
      acc += (static_cast<std::uint64_t>(stack_size - d) + 4) * kBytesPerMarker;
      band_of_row_[d] = band;
      if (acc >= band_bytes && d > 0) {
        band_lo_.push_back(d);
        band_hi_.push_back(band_hi);
        band_hi = d - 1;
        acc = 0;
        ++band;
      }
    }
    band_lo_.push_back(0);
    band_hi_.push_back(band_hi);

    files_.resize(band_lo_.size(), nullptr);
    std::random_device rd;
    const std::string stamp = std::to_string(rd()) + "_" +
                              std::to_string(rd());
    for (std::size_t k = 0; k < files_.size(); ++k) {
      paths_.push_back(dir_ + "/gtcount_spool_" + stamp + "_band" +
                       std::to_string(k) + ".bin");
      files_[k] = std::fopen(paths_[k].c_str(), "wb+");
      if (files_[k] == nullptr) {
        throw Error("cannot create spool file in " + dir_);
      }
    }
  }

  ~DiffSpool() {
    for (std::FILE* f : files_) {
      if (f != nullptr) std::fclose(f);
    }
    for (const std::string& p : paths_) std::remove(p.c_str());
  }

  DiffSpool(const DiffSpool&) = delete;
  DiffSpool& operator=(const DiffSpool&) = delete;

  void Append(int row, int col, const mpz_class& value) {
    unsigned char buf[kMaxMarker];
    const std::size_t len = EncodeMarker(buf, row, col, value);
    const int band = band_of_row_[row];
    if (band == loaded_band_) {
      // The band being swept: file already consumed, go straight to the
      // bucket (the target row is below the row being swept).
      RowBucket& bucket = buckets_[row - band_lo_[band]];
      bucket.offsets.push_back(static_cast<std::uint32_t>(bucket.bytes.size()));
      bucket.bytes.append(reinterpret_cast<const char*>(buf), len);
      return;
    }
    if (std::fwrite(buf, 1, len, files_[band]) != len) {
      throw Error("spool write failed in " + dir_);
    }
  }

  // Prepares the bucket for `row`, loading its band on first touch. Rows
  // must be requested in descending order.
  void BeginRow(int row) {
    const int band = band_of_row_[row];
    if (band == loaded_band_) return;
    LoadBand(band);
  }

  // Streams one row's markers in ascending column order (markers were
  // appended with non-increasing columns, so they come back reversed).
  class RowCursor {
   public:
    RowCursor(RowBucket* bucket, std::size_t n) : bucket_(bucket), left_(n) {}

    // Column of the next marker, or -1 when exhausted.
    int PeekCol() const {
      if (left_ == 0) return -1;
      const unsigned char* p = Entry(left_ - 1);
      return p[2] | (p[3] << 8);
    }

    void Take(mpz_class& value) {
      int col;
      DecodeMarker(Entry(left_ - 1), &col, value);
      --left_;
    }

    bool Done() const { return left_ == 0; }

   private:
    const unsigned char* Entry(std::size_t i) const {
      return reinterpret_cast<const unsigned char*>(bucket_->bytes.data()) +
             bucket_->offsets[i];
    }
    RowBucket* bucket_;
    std::size_t left_;
  };

  RowCursor Cursor(int row) {
    RowBucket& bucket = buckets_[row - band_lo_[band_of_row_[row]]];
    return RowCursor(&bucket, bucket.offsets.size());
  }

  void ReleaseRow(int row) {
    RowBucket& bucket = buckets_[row - band_lo_[band_of_row_[row]]];
    RowBucket().swap(bucket);
  }

 private:
  static constexpr std::size_t kMaxLimbs = 64;
  static constexpr std::size_t kMaxMarker = 5 + 8 * kMaxLimbs;

  std::size_t EncodeMarker(unsigned char* buf, int row, int col,
                           const mpz_class& value) const {
    buf[0] = static_cast<unsigned char>(row & 0xff);
    buf[1] = static_cast<unsigned char>(row >> 8);
    buf[2] = static_cast<unsigned char>(col & 0xff);
    buf[3] = static_cast<unsigned char>(col >> 8);
    std::size_t limbs = 0;
    mpz_export(buf + 5, &limbs, -1, 8, 0, 0, value.get_mpz_t());
    if (limbs > kMaxLimbs) throw Error("spool marker overflow");
    buf[4] = static_cast<unsigned char>(limbs);
    return 5 + 8 * limbs;
  }

  static void DecodeMarker(const unsigned char* p, int* col,
                           mpz_class& value) {
    *col = p[2] | (p[3] << 8);
    const std::size_t limbs = p[4];
    mpz_import(value.get_mpz_t(), limbs, -1, 8, 0, 0, p + 5);
  }

  void LoadBand(int band) {
    // Drop the previous band and slurp this band's file into row buckets.
    buckets_.assign(band_hi_[band] - band_lo_[band] + 1, RowBucket{});
    loaded_band_ = band;

    std::FILE* f = files_[band];
    std::fflush(f);
    std::rewind(f);
    unsigned char buf[kMaxMarker];
    for (;;) {
      const std::size_t got = std::fread(buf, 1, 5, f);
      if (got == 0) break;
      if (got != 5) throw Error("spool read failed: truncated marker");
      const int row = buf[0] | (buf[1] << 8);
      const std::size_t limbs = buf[4];
      if (std::fread(buf + 5, 1, 8 * limbs, f) != 8 * limbs) {
        throw Error("spool read failed: truncated marker");
      }
      RowBucket& bucket = buckets_[row - band_lo_[band]];
      bucket.offsets.push_back(static_cast<std::uint32_t>(bucket.bytes.size()));
      bucket.bytes.append(reinterpret_cast<const char*>(buf), 5 + 8 * limbs);
    }
    std::fclose(f);
    files_[band] = nullptr;
    std::remove(paths_[band].c_str());
  }

  std::string dir_;
  std::vector<int> band_of_row_;
  std::vector<int> band_lo_, band_hi_;
  std::vector<std::FILE*> files_;
  std::vector<std::string> paths_;
  std::vector<RowBucket> buckets_;
  int loaded_band_ = -1;
};

// One round's lattice sweep. The check-allowed side of the lattice only ever
// holds the seeds (one base cell preflop, the bet-zero column later), so it
// is kept as the seed list itself. The call-ends-round side is represented
// by accumulators instead of materialized cells:
//   point_zero[m]    - histories arriving at (m, 0) from a passive action;
//   range starts     - histories opening a raise range at (m, col..m).
// Every raise range from any source ends exactly at its target row's last
// column (the all-in), so a running prefix over range starts while the row
// is swept yields each cell's count with one addition per cell.
//
// Range starts live in one of three places: per-row vectors (kRangeSum),
// fully materialized cells (kDirect), or banded scratch files (kDiskSpool).
// In spool mode the seed-phase and own-row contributions always land at
// column big-blind or at the row end, so they get two dedicated slots per
// row, which keeps the spooled markers arriving in monotone column order.
class RoundPass {
 public:
  RoundPass(const GameSpec& spec, int round, const SweepConfig& config,
            SweepStats* stats)
      : spec_(spec),
        last_round_(round == spec.num_rounds - 1),
        stack_size_(spec.stack_size),
        mode_(config.mode),
        stats_(stats),
        point_zero_(stack_size_ + 1),
        row_progress_(stack_size_ + 1, kNotStarted) {
    tally_.continuing_by_stack.assign(stack_size_ + 1, Count());
    switch (mode_) {
      case SweepMode::kDirect:
        direct_rows_.resize(stack_size_ + 1);
        for (int m = 0; m <= stack_size_; ++m) {
          direct_rows_[m].assign(m + 1, Count());
        }
        break;
      case SweepMode::kRangeSum:
        range_rows_.resize(stack_size_ + 1);
        break;
      case SweepMode::kDiskSpool:
        spool_ = std::make_unique<DiffSpool>(stack_size_, config.spool_dir,
                                             config.spool_band_bytes);
        slot_bb_.assign(stack_size_ + 1, Count());
        slot_end_.assign(stack_size_ + 1, Count());
        break;
    }
  }

  RoundTally Run(const RoundSeed& seed) {
    SeedPhase(seed);
    SweepPhase();
    return std::move(tally_);
  }

 private:
  static constexpr int kNotStarted = -1;
  static constexpr int kRowDone = std::numeric_limits<int>::max();

  void SeedPhase(const RoundSeed& seed) {
    in_seed_phase_ = true;
    if (seed.is_preflop()) {
      const int m = spec_.stack_size - spec_.small_blind;
      const int b = spec_.big_blind - spec_.small_blind;
      static const Count kOne = Count(1ul);
      if (m == 0) {
        // Both blinds are all-ins; the whole game is forced.
        CloseRound(0, kOne);
      } else {
        Visit(m, b, /*check_allowed=*/true, kOne);
      }
    } else {
      const std::vector<Count>& carried = *seed.carried;
      if (static_cast<int>(carried.size()) != stack_size_ + 1) {
        throw Error("carried seed has wrong length");
      }
      // Histories with both players already all-in pass through untouched:
      // the remaining actions are forced and excluded from every count.
      if (!carried[0].IsZero()) CloseRound(0, carried[0]);
      for (int s = stack_size_; s >= 1; --s) {
        if (!carried[s].IsZero()) {
          Visit(s, 0, /*check_allowed=*/true, carried[s]);
        }
      }
    }
    in_seed_phase_ = false;
  }

  void SweepPhase() {
    mpz_class scratch;
    for (int m = stack_size_; m >= 1; --m) {
      current_row_ = m;
      row_progress_[m] = 0;
      if (spool_) spool_->BeginRow(m);
      if (!point_zero_[m].IsZero()) Visit(m, 0, false, point_zero_[m]);

      switch (mode_) {
        case SweepMode::kDirect: {
          std::vector<Count>& row = direct_rows_[m];
          for (int b = 1; b <= m; ++b) {
            row_progress_[m] = b;
            if (!row[b].IsZero()) Visit(m, b, false, row[b]);
          }
          break;
        }
        case SweepMode::kRangeSum: {
          std::vector<Count>& row = range_rows_[m];
          Count carry;
          for (int b = 1; b <= m; ++b) {
            row_progress_[m] = b;
            if (!row.empty() && !row[b].IsZero()) carry += row[b];
            if (!carry.IsZero()) Visit(m, b, false, carry);
          }
          std::vector<Count>().swap(row);  // row is never read again
          break;
        }
        case SweepMode::kDiskSpool: {
          // Markers come back with ascending columns; fold them and the two
          // slot contributions into the carry before visiting each cell.
          auto cursor = spool_->Cursor(m);
          Count carry;
          for (int b = 1; b <= m; ++b) {
            row_progress_[m] = b;
            if (b == spec_.big_blind && !slot_bb_[m].IsZero()) {
              carry += slot_bb_[m];
            }
            if (b == m && !slot_end_[m].IsZero()) carry += slot_end_[m];
            while (cursor.PeekCol() == b) {
              cursor.Take(scratch);
              carry += Count(mpz_class(scratch));
            }
            if (!carry.IsZero()) Visit(m, b, false, carry);
          }
          if (!cursor.Done()) {
            throw Error("spool markers out of order in row " +
                        std::to_string(m));
          }
          spool_->ReleaseRow(m);
          break;
        }
      }
      row_progress_[m] = kRowDone;
    }
  }

  // Tallies one configuration holding n histories and forwards them along
  // each legal action.
  void Visit(int m, int b, bool check_allowed, const Count& n) {
    if (stats_) ++stats_->cells_visited;
    tally_.decisions += n;

    const int mb = m - b;
    unsigned long num_actions = 1;  // the passive action
    if (b > 0) {
      ++num_actions;
      tally_.terminal += n;  // fold
    }

    if (check_allowed && mb > 0) {
      AddPointZero(mb, n);
    } else {
      CloseRound(mb, n);
    }

    if (b < m) {
      const int nominal_min = std::max(b, spec_.big_blind);
      if (mb >= nominal_min) {
        num_actions += static_cast<unsigned long>(mb - nominal_min + 1);
        AddRaiseRange(mb, nominal_min, n);
      } else {
        // All-in below the min-raise: a one-cell "range" at the row end.
        ++num_actions;
        AddRaiseRange(mb, mb, n);
      }
    }
    tally_.infoset_actions += n * num_actions;
  }

  void CloseRound(int stacks_left, const Count& n) {
    if (last_round_) {
      tally_.terminal += n;
    } else {
      tally_.continuing_by_stack[stacks_left] += n;
      tally_.continuing_total += n;
    }
  }

  void AddPointZero(int row, const Count& n) {
    CheckUnread(row, 0);
    point_zero_[row] += n;
  }

  void AddRaiseRange(int row, int col_start, const Count& n) {
    CheckUnread(row, col_start);
    switch (mode_) {
      case SweepMode::kDirect: {
        // col_start..row inclusive, one cell at a time.
        std::vector<Count>& cells = direct_rows_[row];
        for (int c = col_start; c <= row; ++c) cells[c] += n;
        break;
      }
      case SweepMode::kRangeSum: {
        std::vector<Count>& row_cells = range_rows_[row];
        if (row_cells.empty()) row_cells.assign(row + 1, Count());
        row_cells[col_start] += n;
        break;
      }
      case SweepMode::kDiskSpool: {
        // Seed-phase and own-row contributions land at the big blind or the
        // row end; everything else goes through the spool in monotone
        // column order.
        if (in_seed_phase_ || row == current_row_) {
          if (col_start == row) {
            slot_end_[row] += n;
          } else {
            slot_bb_[row] += n;
          }
        } else {
          spool_->Append(row, col_start, n.raw());
        }
        break;
      }
    }
  }

  // A write to (row, col) after that cell was already swept would mean the
  // traversal order is unsound; see SweepStats.
  void CheckUnread(int row, int col) {
    if (stats_ && row_progress_[row] >= col) {
      ++stats_->write_after_read_violations;
    }
  }

  const GameSpec& spec_;
  const bool last_round_;
  const int stack_size_;
  const SweepMode mode_;
  SweepStats* stats_;

  std::vector<Count> point_zero_;
  std::vector<std::vector<Count>> range_rows_;   // range-start accumulators
  std::vector<std::vector<Count>> direct_rows_;  // materialized cells
  std::unique_ptr<DiffSpool> spool_;
  std::vector<Count> slot_bb_, slot_end_;        // spool-mode specials
  std::vector<int> row_progress_;
  bool in_seed_phase_ = false;
  int current_row_ = -1;

  RoundTally tally_;
};

}  // namespace

RoundTally RunRoundPass(const GameSpec& spec, int round, const RoundSeed& seed,
                        const SweepConfig& config, SweepStats* stats) {
  spec.Validate();
  if (spec.betting != BettingKind::kNoLimit) {
    throw Error("RunRoundPass applies to no-limit games");
  }
  if (round < 0 || round >= spec.num_rounds) {
    throw Error("round out of range: " + std::to_string(round));
  }
  if (round == 0 && !seed.is_preflop()) {
    throw Error("round 0 must be seeded with the preflop base");
  }
  if (round > 0 && seed.is_preflop()) {
    throw Error("later rounds must be seeded with carried counts");
  }
  if (spec.stack_size > 0xffff && config.mode == SweepMode::kDiskSpool) {
    throw Error("spool mode supports stacks up to 65535");
  }
  RoundPass pass(spec, round, config, stats);
  return pass.Run(seed);
}

std::vector<RoundTally> CountNolimitGame(const GameSpec& spec,
                                         const SweepConfig& config,
                                         SweepStats* stats,
                                         const RoundProgressFn& progress) {
  std::vector<RoundTally> rounds;
  RoundSeed seed = RoundSeed::Preflop();
  for (int r = 0; r < spec.num_rounds; ++r) {
    rounds.push_back(RunRoundPass(spec, r, seed, config, stats));
    if (progress) progress(r, rounds.back());
    if (r + 1 < spec.num_rounds) {
      seed = RoundSeed::Carried(rounds.back().continuing_by_stack);
    }
  }
  return rounds;
}

SizeReport NolimitGameSize(const GameSpec& spec, const DealCounts& deals,
                           const SweepConfig& config,
                           const RoundProgressFn& progress) {
  std::vector<RoundTally> rounds = CountNolimitGame(spec, config, nullptr,
                                                    progress);
  std::vector<RawRoundTally> raw;
  raw.reserve(rounds.size());
  for (const RoundTally& t : rounds) raw.push_back(t.ToRaw());
  return BuildSizeReport(spec, DescribeGame(spec), std::move(raw), deals);
}

}  // namespace gtcount
