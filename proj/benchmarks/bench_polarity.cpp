// Copyright 2026 The wpolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "wpolar/benzenoid.hpp"
#include "wpolar/polarity.hpp"
#include "wpolar/tubulene.hpp"

namespace {

using namespace wpolar;

void BM_BruteBenzenoid(benchmark::State& state) {
  const auto b = random_benzenoid(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(wp_bruteforce(b.graph()));
  state.counters["n"] = static_cast<double>(b.graph().vertex_count());
}
BENCHMARK(BM_BruteBenzenoid)->Arg(50)->Arg(200)->Arg(800);

void BM_CutBenzenoid(benchmark::State& state) {
  const auto b = random_benzenoid(static_cast<int>(state.range(0)), 1);
  const auto tally = classify_external_hexagons(b);
  for (auto _ : state) benchmark::DoNotOptimize(wp_cut_method(b.graph(), b.hexagon_count(), tally));
}
BENCHMARK(BM_CutBenzenoid)->Arg(50)->Arg(200)->Arg(800);

void BM_ExternalTally(benchmark::State& state) {
  const auto b = random_benzenoid(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(classify_external_hexagons(b));
}
BENCHMARK(BM_ExternalTally)->Arg(50)->Arg(200)->Arg(800);

void BM_ClosedBenzenoid(benchmark::State& state) {
  const auto b = random_benzenoid(static_cast<int>(state.range(0)), 1);
  const auto t = classify_external_hexagons(b);
  for (auto _ : state) benchmark::DoNotOptimize(wp_benzenoid_closed(b.hexagon_count(), t.h1, t.h2, t.h3));
}
BENCHMARK(BM_ClosedBenzenoid)->Arg(50)->Arg(200)->Arg(800);

void BM_RandomBenzenoid(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_benzenoid(static_cast<int>(state.range(0)), ++seed));
}
BENCHMARK(BM_RandomBenzenoid)->Arg(50)->Arg(200);

void BM_BruteZigzag(benchmark::State& state) {
  const auto t = build_zigzag(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(wp_bruteforce(t.graph()));
}
BENCHMARK(BM_BruteZigzag)->Arg(6)->Arg(60);

void BM_CutArmchair(benchmark::State& state) {
  const auto t = build_armchair(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(wp_cut_method(t));
}
BENCHMARK(BM_CutArmchair)->Arg(8)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
