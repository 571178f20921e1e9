// Copyright 2026 The dzeta Authors
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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "dzeta/continuation.hpp"
#include "dzeta/kernel.hpp"
#include "dzeta/parallel.hpp"
#include "dzeta/series.hpp"

namespace {

using dzeta::ZetaArgs;

void BM_Av2PartialSum(benchmark::State& state) {
  dzeta::set_thread_count(1);
  const ZetaArgs a{{1.5, 3.0}, {1.5, -1.0}, {1.5, 10.0}};
  const std::int64_t M = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::av2_partial_sum(a, M));
  state.counters["terms/s"] = benchmark::Counter(
      static_cast<double>(M) * static_cast<double>(M - 1) / 2.0, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Av2PartialSum)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Mt2PartialSum(benchmark::State& state) {
  dzeta::set_thread_count(1);
  const ZetaArgs a{{1.5, 3.0}, {1.5, -1.0}, {1.5, 10.0}};
  const std::int64_t M = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::mt2_partial_sum(a, M));
}
BENCHMARK(BM_Mt2PartialSum)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Av2Direct(benchmark::State& state) {
  const ZetaArgs a{1.5, 1.5, 1.5};
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::av2_direct(a, 1e-9));
}
BENCHMARK(BM_Av2Direct)->Unit(benchmark::kMillisecond);

void BM_Av2ApproxSecond(benchmark::State& state) {
  dzeta::set_thread_count(1);
  const ZetaArgs a{0.5, 1.6, {0.4, static_cast<double>(state.range(0))}};
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::av2_approx_second(a));
}
BENCHMARK(BM_Av2ApproxSecond)->Arg(50)->Arg(400)->Arg(3200)->Unit(benchmark::kMicrosecond);

void BM_Mt2Approx(benchmark::State& state) {
  dzeta::set_thread_count(1);
  const ZetaArgs a{0.55, 0.55, {0.45, static_cast<double>(state.range(0))}};
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::mt2_approx(a));
}
BENCHMARK(BM_Mt2Approx)->Arg(50)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_TailIntegral(benchmark::State& state) {
  const dzeta::QuadratureSpec q;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dzeta::tail_integral(3, 10.0, {0.5, 2.0}, {0.7, 5.0}, q));
  }
}
BENCHMARK(BM_TailIntegral)->Unit(benchmark::kMicrosecond);

}  // namespace
