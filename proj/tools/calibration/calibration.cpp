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

#include "calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace dzeta::calibration {
namespace {

// Heuristic constants of 1 turn the reported bounds into bare shapes.
Constants unit_constants() {
  Constants c = builtin_constants();
  c.first_approx = c.second_approx = c.mt_approx = 1.0;
  return c;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

SeriesLimits reference_limits() {
  SeriesLimits l;
  l.max_terms = 400'000'000;
  return l;
}

std::vector<ZetaArgs> overlap_grid(std::uint64_t seed, int count, bool mt) {
  std::mt19937_64 rng(seed);
  std::vector<ZetaArgs> out;
  for (int i = 0; i < count; ++i) {
    // Half-open (1, 1.5]: reflect the draw from [1, 1.5).
    const double x1 = 2.5 - uniform(rng, 1.0, 1.5);
    const double x2 = 2.5 - uniform(rng, 1.0, 1.5);
    const double x3 = 2.5 - uniform(rng, 1.0, 1.5);
    const double t1 = uniform(rng, 0.0, 1.0);
    const double t2 = mt ? uniform(rng, 0.0, 1.0) : uniform(rng, -1.0, 1.0);
    const double t3 = uniform(rng, 2.0, 50.0);
    out.push_back({{x1, t1}, {x2, t2}, {x3, t3}});
  }
  return out;
}

std::vector<FirstApproxPoint> first_approx_grid(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<FirstApproxPoint> out;
  for (int i = 0; i < count; ++i) {
    const double x1 = uniform(rng, 0.5, 1.5);
    const double x2 = uniform(rng, 1.0, 2.0);
    // Kept well inside the absolute region so the direct reference is sharp.
    const double lo3 = std::max({2.5 - x1, 3.5 - x1 - x2, 0.05});
    const double x3 = uniform(rng, lo3, lo3 + 1.0);
    FirstApproxPoint p;
    p.params.x = std::floor(uniform(rng, 4.0, 40.0));
    p.params.y = std::floor(p.params.x * uniform(rng, 1.0, 2.0));
    const double t1 = uniform(rng, 0.0, 1.0);
    const double reach = 2.0 * std::numbers::pi * p.params.x / p.params.C - t1;
    const double t3 = uniform(rng, 0.5, reach);
    p.args = {{x1, t1}, {x2, uniform(rng, -1.0, 1.0)}, {x3, t3}};
    out.push_back(p);
  }
  return out;
}

std::vector<MvInstance> mv_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<MvInstance> out;
  for (int i = 0; i < count; ++i) {
    MvInstance m;
    const auto N = std::uniform_int_distribution<int>(1, 32)(rng);
    for (int n = 1; n <= N; ++n) {
      if (uniform(rng, 0.0, 1.0) < 0.25) continue;
      const double r = uniform(rng, 0.0, 1.0);
      const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      m.poly.coefficients.emplace_back(n, std::polar(r, phase));
    }
    m.T = uniform(rng, 10.0, 500.0);
    out.push_back(std::move(m));
  }
  return out;
}

Ratio second_approx_ratio(const ZetaArgs& a) {
  const ApproxValue approx = av2_approx_second(a, unit_constants());
  const ApproxValue direct = av2_direct(a, 1e-12, reference_limits());
  Ratio r;
  r.difference = std::abs(approx.value - direct.value);
  r.shape = approx.error_bound;
  r.ratio = r.difference / r.shape;
  r.reference_error = direct.error_bound;
  return r;
}

Ratio mt_approx_ratio(const ZetaArgs& a) {
  const ApproxValue approx = mt2_approx(a, unit_constants());
  const ApproxValue direct = mt2_direct(a, 1e-12, reference_limits());
  Ratio r;
  r.difference = std::abs(approx.value - direct.value);
  r.shape = approx.error_bound;
  r.ratio = r.difference / r.shape;
  r.reference_error = direct.error_bound;
  return r;
}

Ratio first_approx_ratio(const FirstApproxPoint& p) {
  const ApproxValue approx = av2_approx_first(p.args, p.params, {}, unit_constants());
  const ApproxValue direct = av2_direct(p.args, 1e-12, reference_limits());
  Ratio r;
  r.difference = std::abs(approx.value - direct.value);
  // The reported bound also carries the quadrature error of the tail integrals.
  r.shape = approx.error_bound;
  r.ratio = r.difference / r.shape;
  r.reference_error = direct.error_bound;
  return r;
}

double mv_ratio(const MvInstance& m) {
  const MvCheck c = mv_check(m.poly, m.T);
  if (c.budget == 0.0) return 0.0;
  return std::abs(c.lhs - c.main) / c.budget;
}

}  // namespace dzeta::calibration
