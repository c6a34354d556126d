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

#ifndef GTCOUNT_ORACLE_HPP_
#define GTCOUNT_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "gtcount/count.hpp"
#include "gtcount/gamespec.hpp"
#include "gtcount/limit_counter.hpp"
#include "gtcount/nolimit_counter.hpp"

namespace gtcount {

// Thrown when a walk would visit more nodes than the guard allows. The
// estimate comes from the dynamic program, which is cheap at any size the
// walker could conceivably handle.
class OracleTooLarge : public Error {
 public:
  OracleTooLarge(std::string msg, Count estimate)
      : Error(std::move(msg)), estimated_nodes(std::move(estimate)) {}
  Count estimated_nodes;
};

struct OracleLimits {
  std::uint64_t max_nodes = 1'000'000'000;
};

struct OracleResult {
  // No-limit: cumulative per-round tallies, same meaning as RunRoundPass's.
  // Limit: within-round profiles, same meaning as EnumerateLimitRound's
  // counts (decisions / actions / continuing / terminal per round).
  std::vector<RoundTally> rounds;
  std::uint64_t nodes_visited = 0;
};

// Walks every betting history by explicit recursion, sharing LegalActions
// with the dynamic program so the two can disagree only about traversal, not
// rules. (An independently written rule check lives in the test suite.)
// Limit specs are walked under the bet-count rules and are always tractable.
OracleResult WalkBetting(const GameSpec& spec, const OracleLimits& limits = {});

}  // namespace gtcount

#endif  // GTCOUNT_ORACLE_HPP_
