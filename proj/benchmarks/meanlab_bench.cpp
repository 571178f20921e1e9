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

#include <benchmark/benchmark.h>

#include "dzeta/meanlab.hpp"
#include "dzeta/parallel.hpp"

namespace {

void BM_MeanSquareAv(benchmark::State& state) {
  dzeta::set_thread_count(static_cast<unsigned>(state.range(0)));
  dzeta::MeanSquarePlan p;
  p.s1 = 0.5;
  p.s2 = 1.6;
  p.sigma3 = 0.4;
  p.T_samples = {50.0, 100.0, 200.0};
  p.evaluator = dzeta::Evaluator::second_approx;
  p.eps = 1e-8;
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::mean_square(p));
}
BENCHMARK(BM_MeanSquareAv)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MvCheck(benchmark::State& state) {
  dzeta::DirichletPoly poly;
  for (std::int64_t n = 1; n <= state.range(0); ++n) poly.coefficients.push_back({n, {1.0, 0.5}});
  for (auto _ : state) benchmark::DoNotOptimize(dzeta::mv_check(poly, 200.0));
}
BENCHMARK(BM_MvCheck)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
