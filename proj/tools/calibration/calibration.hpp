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

#pragma once

#include <cstdint>
#include <vector>

#include "dzeta/constants.hpp"
#include "dzeta/continuation.hpp"
#include "dzeta/meanlab.hpp"
#include "dzeta/series.hpp"

namespace dzeta::calibration {

// Seeds of the frozen calibration sweeps; held-out grids use other seeds.
inline constexpr std::uint64_t kTrainSeed = 20260901;
inline constexpr std::uint64_t kHeldOutSeed = 20261017;

// Cap on direct evaluations used as the reference values.
SeriesLimits reference_limits();

// sigma_j in (1, 1.5], t3 in [2, 50]; t1 in [0, 1], t2 in [-1, 1] (MT: [0, 1]).
std::vector<ZetaArgs> overlap_grid(std::uint64_t seed, int count, bool mt);

struct FirstApproxPoint {
  ZetaArgs args;
  FirstApproxParams params;
};
// Points in the absolute region satisfying the first-approximation hypotheses.
std::vector<FirstApproxPoint> first_approx_grid(std::uint64_t seed, int count);

// Random polynomials with n <= 32, |a_n| <= 1, paired with T in [10, 500].
struct MvInstance {
  DirichletPoly poly;
  double T = 0.0;
};
std::vector<MvInstance> mv_instances(std::uint64_t seed, int count);

struct Ratio {
  double difference = 0.0;
  double shape = 0.0;
  double ratio = 0.0;
  // Error bound of the direct reference value.
  double reference_error = 0.0;
};

// |approximation - direct| divided by the O-term shape (constant 1).
Ratio second_approx_ratio(const ZetaArgs& a);
Ratio mt_approx_ratio(const ZetaArgs& a);
Ratio first_approx_ratio(const FirstApproxPoint& p);
// |lhs - main| / budget.
double mv_ratio(const MvInstance& m);

}  // namespace dzeta::calibration
