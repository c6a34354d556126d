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

#ifndef GTCOUNT_CARDS_HPP_
#define GTCOUNT_CARDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gtcount/count.hpp"
#include "gtcount/gamespec.hpp"

namespace gtcount {

// Exact C(n, k). Throws Error unless 0 <= k <= n.
Count Binomial(int n, int k);

// Ways to deal private and public cards through each round: from an
// omniscient view (both players' holes), from one player's view, and from
// one player's view after merging suit-isomorphic deals.
struct DealCounts {
  struct Round {
    Count two_player;
    Count one_player;
    std::optional<Count> canonical_one_player;
  };
  std::vector<Round> rounds;
};

// Fills the two-player and one-player columns from the spec's deck and board
// schedule. Canonical counts are left unset; see CanonicalCount and
// CanonicalCache for the two ways to obtain them.
DealCounts ComputeDealCounts(const GameSpec& spec);

struct Card {
  int rank = 0;
  int suit = 0;
  auto operator<=>(const Card&) const = default;
};

// One player's view of a deal: their unordered hole cards plus the unordered
// board cards of each round dealt so far. The per-round board partition
// matters: a turn card is not interchangeable with a flop card.
struct CardView {
  std::vector<Card> hole;
  std::vector<std::vector<Card>> board;

  bool operator==(const CardView&) const = default;
};

// The lexicographically least member of the view's suit-isomorphism orbit,
// where views are ordered by their serialization: hole cards sorted, then
// each round's board sorted, cards compared as (rank, suit).
CardView CanonicalForm(const CardView& view, int num_suits);

// Number of suit-isomorphism orbits of one-player views at the given round,
// computed by enumerating every one-player deal and counting the ones equal
// to their own canonical form. Needs no orbit storage, so memory stays flat
// even for the 2.8e9-orbit river.
//
// Splitting the hole-card range over num_threads (0 = hardware default)
// cannot change the result; counts are summed.
Count CanonicalCount(const GameSpec& spec, int round, int num_threads = 0);

// Text cache of canonical counts, shipped for the Texas and royal decks so
// reports do not have to redo the minutes-to-hours turn and river
// enumerations. Lines are `ranks suits hole board-prefix count`, e.g.
//
//   13 4 2 0,3,1 55190538
//
// where board-prefix joins the per-round board sizes dealt through the
// round. Regenerable with `gtcount cards --compute --write-cache`.
class CanonicalCache {
 public:
  static std::string KeyFor(const GameSpec& spec, int round);

  // Merges entries from the file into the cache. Throws Error if unreadable
  // or malformed.
  void LoadFile(const std::string& path);
  void SaveFile(const std::string& path) const;

  std::optional<Count> Lookup(const GameSpec& spec, int round) const;
  void Put(const GameSpec& spec, int round, Count value);

  std::size_t size() const { return entries_.size(); }

 private:
  // key -> count, keyed by KeyFor.
  std::vector<std::pair<std::string, Count>> entries_;
};

// Resolves the canonical-count cache path: explicit argument if nonempty,
// else $GTCOUNT_CANONICAL_CACHE, else the file installed with the library.
std::string ResolveCachePath(const std::string& explicit_path = "");

}  // namespace gtcount

#endif  // GTCOUNT_CARDS_HPP_
