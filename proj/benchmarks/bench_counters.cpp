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

#include <benchmark/benchmark.h>

#include "gtcount/cards.hpp"
#include "gtcount/gamespec.hpp"
#include "gtcount/nolimit_counter.hpp"
#include "gtcount/oracle.hpp"

namespace {

gtcount::GameSpec TexasWithStack(int stack) {
  gtcount::GameSpec spec = gtcount::BuiltinGame("acpc-nl-2009");
  spec.stack_size = stack;
  spec.Validate();
  return spec;
}

// The full four-round configuration sweep; the range-sum mode is the one
// production uses, the direct mode is the O(S^3) reference it replaced.
void BM_CountGame_RangeSum(benchmark::State& state) {
  gtcount::GameSpec spec = TexasWithStack(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtcount::CountNolimitGame(spec));
  }
}
BENCHMARK(BM_CountGame_RangeSum)->Arg(50)->Arg(100)->Arg(200)->Arg(400)
    ->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CountGame_Direct(benchmark::State& state) {
  gtcount::GameSpec spec = TexasWithStack(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gtcount::CountNolimitGame(spec, gtcount::SweepMode::kDirect));
  }
}
BENCHMARK(BM_CountGame_Direct)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond);

void BM_OracleWalk_Royal(benchmark::State& state) {
  gtcount::GameSpec spec = gtcount::BuiltinGame("royal-2-20");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtcount::WalkBetting(spec));
  }
}
BENCHMARK(BM_OracleWalk_Royal)->Unit(benchmark::kMicrosecond);

void BM_CanonicalCount_RoyalFlop(benchmark::State& state) {
  gtcount::GameSpec spec = gtcount::BuiltinGame("royal-2-20");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtcount::CanonicalCount(spec, 1, 1));
  }
}
BENCHMARK(BM_CanonicalCount_RoyalFlop)->Unit(benchmark::kMillisecond);

void BM_CanonicalCount_TexasFlop(benchmark::State& state) {
  gtcount::GameSpec spec = gtcount::BuiltinGame("acpc-nl-2009");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtcount::CanonicalCount(spec, 1, 1));
  }
}
BENCHMARK(BM_CanonicalCount_TexasFlop)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
