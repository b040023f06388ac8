/*
 * Copyright 2026 The eostrata Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "eostrata/dieudonne.hpp"
#include "eostrata/dlclassify.hpp"
#include "eostrata/weyl.hpp"

using namespace eostrata;

namespace {

void BM_LengthOverGroup(benchmark::State& state) {
  const auto& group = weyl::enumerate_group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long total = 0;
    for (const auto& w : group) total += weyl::length(w);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(group.size()));
}
BENCHMARK(BM_LengthOverGroup)->DenseRange(2, 5);

void BM_EnumerateIW(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weyl::enumerate_IW(n));
}
BENCHMARK(BM_EnumerateIW)->DenseRange(2, 10, 4);

void BM_Census(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dlclassify::census_detailed(c, 2, m, false));
}
BENCHMARK(BM_Census)->Args({1, 2})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_VerifyPullback(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto space = dlclassify::census_space(2, 2, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto u = dlclassify::random_lagrangian(space, seed++);
    benchmark::DoNotOptimize(dieudonne::verify_pullback(space, u, g));
  }
}
BENCHMARK(BM_VerifyPullback)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
