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

#include "gtcount/cards.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace gtcount {

Count Binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error("Binomial requires 0 <= k <= n, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  }
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Count(std::move(v));
}

DealCounts ComputeDealCounts(const GameSpec& spec) {
  spec.Validate();
  const int deck = spec.deck_size();
  const int hole = spec.num_hole_cards;

  DealCounts out;
  Count two = Binomial(deck, hole) * Binomial(deck - hole, hole);
  Count one = Binomial(deck, hole);
  int dealt_two = 2 * hole;  // cards gone from the omniscient view
  int dealt_one = hole;      // cards gone from one player's view
  for (int r = 0; r < spec.num_rounds; ++r) {
    const int b = spec.board_cards[r];
    two *= Binomial(deck - dealt_two, b);
    one *= Binomial(deck - dealt_one, b);
    dealt_two += b;
    dealt_one += b;
    out.rounds.push_back({two, one, std::nullopt});
  }
  return out;
}

namespace {

// All suit permutations except the identity, as card-code lookup tables
// (code = rank * num_suits + suit).
std::vector<std::vector<std::uint8_t>> BuildPermMaps(int num_ranks,
                                                     int num_suits) {
  std::vector<int> perm(num_suits);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> maps;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint8_t> map(num_ranks * num_suits);
    for (int r = 0; r < num_ranks; ++r) {
      for (int s = 0; s < num_suits; ++s) {
        map[r * num_suits + s] =
            static_cast<std::uint8_t>(r * num_suits + perm[s]);
      }
    }
    maps.push_back(std::move(map));
  }
  return maps;
}

constexpr int kMaxGroup = 8;

// Applies `map` to the ascending card group `group` and compares the sorted
// image against the original: -1 smaller, 0 equal, +1 larger.
int CompareMapped(const std::uint8_t* map, const std::uint8_t* group, int k) {
  std::array<std::uint8_t, kMaxGroup> img;
  for (int i = 0; i < k; ++i) {
    std::uint8_t v = map[group[i]];
    int j = i;
    while (j > 0 && img[j - 1] > v) {
      img[j] = img[j - 1];
      --j;
    }
    img[j] = v;
  }
  for (int i = 0; i < k; ++i) {
    if (img[i] != group[i]) return img[i] < group[i] ? -1 : 1;
  }
  return 0;
}

// Enumerates one-player views group by group (hole, then each nonempty board
// round), keeping only views equal to their own canonical form. At each group
// the set of "live" permutations -- those mapping the prefix to itself -- is
// narrowed; a permutation mapping the prefix strictly lower kills the whole
// subtree, and once no permutation ties, every completion is canonical and
// the tail is counted in closed form.
class SelfCanonicalCounter {
 public:
  SelfCanonicalCounter(const GameSpec& spec, int round)
      : deck_(spec.deck_size()),
        perm_maps_(BuildPermMaps(spec.num_ranks, spec.num_suits)) {
    group_sizes_.push_back(spec.num_hole_cards);
    for (int r = 0; r <= round; ++r) {
      if (spec.board_cards[r] > 0) group_sizes_.push_back(spec.board_cards[r]);
    }
    for (int k : group_sizes_) {
      if (k > kMaxGroup) throw Error("card group too large");
    }
  }

  std::uint64_t Count(int num_threads) const {
    if (num_threads <= 0) {
      num_threads = static_cast<int>(std::thread::hardware_concurrency());
      if (num_threads <= 0) num_threads = 1;
    }
    // Partition on the first hole card; any partition sums to the same total.
    if (num_threads == 1) return CountFirstCardRange(0, deck_);
    std::vector<std::uint64_t> partial(num_threads, 0);
    std::vector<std::thread> workers;
    for (int t = 0; t < num_threads; ++t) {
      workers.emplace_back([this, t, num_threads, &partial] {
        std::uint64_t sum = 0;
        for (int c = t; c < deck_; c += num_threads) {
          sum += CountFirstCardRange(c, c + 1);
        }
        partial[t] = sum;
      });
    }
    for (auto& w : workers) w.join();
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
  }

 private:
  struct Frame {
    std::vector<std::uint8_t> remaining;
    std::vector<const std::uint8_t*> live;
  };

  std::uint64_t CountFirstCardRange(int first_lo, int first_hi) const {
    std::vector<Frame> frames(group_sizes_.size() + 1);
    for (auto& f : frames) {
      f.remaining.reserve(deck_);
      f.live.reserve(perm_maps_.size());
    }
    frames[0].remaining.resize(deck_);
    std::iota(frames[0].remaining.begin(), frames[0].remaining.end(), 0);
    for (const auto& m : perm_maps_) frames[0].live.push_back(m.data());
    return CountGroup(0, frames, first_lo, first_hi);
  }

  // Product of C(remaining - consumed, k) over groups past `group`: the
  // number of completions, all canonical once no permutation is live.
  std::uint64_t TailCombinations(std::size_t group, int remaining) const {
    std::uint64_t prod = 1;
    for (std::size_t g = group; g < group_sizes_.size(); ++g) {
      const int k = group_sizes_[g];
      std::uint64_t c = 1;
      for (int i = 0; i < k; ++i) c = c * (remaining - i) / (i + 1);
      prod *= c;
      remaining -= k;
    }
    return prod;
  }

  std::uint64_t CountGroup(std::size_t group, std::vector<Frame>& frames,
                           int first_lo, int first_hi) const {
    if (group == group_sizes_.size()) return 1;
    const Frame& in = frames[group];
    if (in.live.empty()) {
      return TailCombinations(group, static_cast<int>(in.remaining.size()));
    }
    Frame& out = frames[group + 1];
    const int k = group_sizes_[group];
    const int n = static_cast<int>(in.remaining.size());
    std::uint64_t total = 0;

    std::array<int, kMaxGroup> idx;
    std::iota(idx.begin(), idx.begin() + k, 0);
    std::array<std::uint8_t, kMaxGroup> cards;
    while (true) {
      for (int i = 0; i < k; ++i) cards[i] = in.remaining[idx[i]];
      // The hole group is optionally restricted to a first-card range so
      // that work can be partitioned across threads.
      if (group == 0 && (cards[0] < first_lo || cards[0] >= first_hi)) {
        if (cards[0] >= first_hi) break;
      } else {
        bool beaten = false;
        out.live.clear();
        for (const std::uint8_t* map : in.live) {
          int cmp = CompareMapped(map, cards.data(), k);
          if (cmp < 0) {
            beaten = true;
            break;
          }
          if (cmp == 0) out.live.push_back(map);
        }
        if (!beaten) {
          out.remaining.clear();
          int j = 0;
          for (int i = 0; i < n; ++i) {
            if (j < k && idx[j] == i) {
              ++j;
            } else {
              out.remaining.push_back(in.remaining[i]);
            }
          }
          total += CountGroup(group + 1, frames, first_lo, first_hi);
        }
      }
      // next k-combination of n
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j2 = i + 1; j2 < k; ++j2) idx[j2] = idx[j2 - 1] + 1;
    }
    return total;
  }

  const int deck_;
  std::vector<std::vector<std::uint8_t>> perm_maps_;
  std::vector<int> group_sizes_;
};

}  // namespace

Count CanonicalCount(const GameSpec& spec, int round, int num_threads) {
  spec.Validate();
  if (round < 0 || round >= spec.num_rounds) {
    throw Error("round out of range: " + std::to_string(round));
  }
  SelfCanonicalCounter counter(spec, round);
  return Count(static_cast<unsigned long>(counter.Count(num_threads)));
}

CardView CanonicalForm(const CardView& view, int num_suits) {
  auto sorted = [](CardView v) {
    std::sort(v.hole.begin(), v.hole.end());
    for (auto& g : v.board) std::sort(g.begin(), g.end());
    return v;
  };
  auto less = [](const CardView& a, const CardView& b) {
    if (a.hole != b.hole) return a.hole < b.hole;
    return a.board < b.board;
  };

  std::vector<int> perm(num_suits);
  std::iota(perm.begin(), perm.end(), 0);
  CardView best = sorted(view);
  do {
    CardView mapped = view;
    for (auto& c : mapped.hole) c.suit = perm[c.suit];
    for (auto& g : mapped.board) {
      for (auto& c : g) c.suit = perm[c.suit];
    }
    mapped = sorted(std::move(mapped));
    if (less(mapped, best)) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string CanonicalCache::KeyFor(const GameSpec& spec, int round) {
  if (round < 0 || round >= spec.num_rounds) {
    throw Error("round out of range: " + std::to_string(round));
  }
  std::ostringstream key;
  key << spec.num_ranks << " " << spec.num_suits << " " << spec.num_hole_cards
      << " ";
  for (int r = 0; r <= round; ++r) {
    if (r > 0) key << ",";
    key << spec.board_cards[r];
  }
  return key.str();
}

void CanonicalCache::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open canonical-count cache: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::istringstream fields(trimmed);
    int ranks, suits, hole;
    std::string prefix, value;
    if (!(fields >> ranks >> suits >> hole >> prefix >> value)) {
      throw Error("malformed cache line " + std::to_string(line_no) + " in " +
                  path);
    }
    std::string key = std::to_string(ranks) + " " + std::to_string(suits) +
                      " " + std::to_string(hole) + " " + prefix;
    Count count = Count::FromDecimal(value);
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const auto& e) { return e.first == key; });
    if (it != entries_.end()) {
      it->second = std::move(count);
    } else {
      entries_.emplace_back(std::move(key), std::move(count));
    }
  }
}

void CanonicalCache::SaveFile(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write canonical-count cache: " + path);
  out << "# Canonical one-player deal counts under suit isomorphism.\n";
  out << "# ranks suits hole board-prefix count\n";
  auto sorted = entries_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [key, count] : sorted) {
    out << key << " " << count.ToDecimal() << "\n";
  }
  if (!out) throw Error("error writing cache file: " + path);
}

std::optional<Count> CanonicalCache::Lookup(const GameSpec& spec,
                                            int round) const {
  const std::string key = KeyFor(spec, round);
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void CanonicalCache::Put(const GameSpec& spec, int round, Count value) {
  const std::string key = KeyFor(spec, round);
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

std::string ResolveCachePath(const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv("GTCOUNT_CANONICAL_CACHE")) {
    if (*env) return env;
  }
#ifdef GTCOUNT_INSTALL_DATADIR
  {
    std::string installed = std::string(GTCOUNT_INSTALL_DATADIR) +
                            "/canonical_counts.txt";
    if (std::filesystem::exists(installed)) return installed;
  }
#endif
#ifdef GTCOUNT_SOURCE_DATA_DIR
  {
    std::string source = std::string(GTCOUNT_SOURCE_DATA_DIR) +
                         "/canonical_counts.txt";
    if (std::filesystem::exists(source)) return source;
  }
#endif
  return "canonical_counts.txt";
}

}  // namespace gtcount
