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

#include "dzeta/constants.hpp"
#include "dzeta/quadrature.hpp"
#include "dzeta/series.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

// Distance below which a point counts as lying on a singular hyperplane.
inline constexpr double kHyperplaneGuard = 1e-9;

struct FirstApproxParams {
  double x = 1.0;
  double y = 1.0;
  double C = 4.0 * 3.14159265358979323846 / 3.0;

  // Throws PreconditionError unless y >= x >= 1 and C > 1.
  void validate() const;
  // |t3| <= 2 pi x / C - |t1|.
  bool admissible(const ZetaArgs& a) const;
};

// First approximation formula: finite double sum over n <= x, n < m <= y,
// plus the y-boundary sum, the tail integrals for n <= x and the n > x
// Dirichlet tail. For n > x the integral scales exactly,
//   int_n^oo u^{-s1} (u+n)^{-s3-1} du = n^{-s1-s3} int_1^oo v^{-s1} (v+1)^{-s3-1} dv,
// so those two corrections collapse onto one Dirichlet tail in
// s1 + s2 + s3 - 1. Heuristic O-term: constant * x^{-sigma1-sigma3}
// (sigma2 > 1), with log x at sigma2 = 1, x^{1-sigma_sum} below.
ApproxValue av2_approx_first(const ZetaArgs& a, const FirstApproxParams& p,
                             const QuadratureSpec& quad = {},
                             const Constants& constants = builtin_constants());

// Throw the precondition, domain or hyperplane error for the first violated
// hypothesis of the second approximation formula / its MT analogue.
void check_av2_second(const ZetaArgs& a);
void check_mt2_approx(const ZetaArgs& a);

// floor(max(1, |t1|) t3) and floor(max(1, |t1|, |t2|) t3), scaled.
std::int64_t av2_second_cutoff(const ZetaArgs& a, double cutoff_scale = 1.0);
std::int64_t mt2_approx_cutoff(const ZetaArgs& a, double cutoff_scale = 1.0);

// The O-term shapes without constants (power of t3 times log t3 where due).
double av2_second_error_shape(const ZetaArgs& a);
double mt2_approx_error_shape(const ZetaArgs& a);

// sum_{m <= a t3} sum_{n<m} m^{-s1} n^{-s2} (m+n)^{-s3}. `cutoff_scale`
// multiplies the cutoff (1 in production; 2 for stability probes).
ApproxValue av2_approx_second(const ZetaArgs& a,
                              const Constants& constants = builtin_constants(),
                              double cutoff_scale = 1.0);

// sum_{m, n <= b t3} m^{-s1} n^{-s2} (m+n)^{-s3}.
ApproxValue mt2_approx(const ZetaArgs& a, const Constants& constants = builtin_constants(),
                       double cutoff_scale = 1.0);

// zeta(s) by Euler-Maclaurin with a cutoff chosen from |Im s|.
ApproxValue riemann_zeta(Complex s);

enum class Route { direct, approx };

std::string_view to_string(Route r);
Route route_from_string(std::string_view name);

struct RelationResidual {
  // zeta_MT - 2^{-s3} zeta(s1+s2+s3) - zeta_AV(s1,s2,s3) - zeta_AV(s2,s1,s3)
  Complex residual;
  // Sum of the four error budgets.
  double budget = 0.0;
  Rigor rigor = Rigor::rigorous;
  std::int64_t cutoff = 0;
};

// Direct route: the three double series are summed to one common cutoff
// (the largest needed for eps, clamped by `limits`), so their truncations
// line up and the residual reduces to the diagonal tail and rounding.
// Approx route: mt2_approx and av2_approx_second at their own cutoffs.
RelationResidual functional_relation_residual(const ZetaArgs& a, double eps,
                                              Route route = Route::direct,
                                              const SeriesLimits& limits = {},
                                              const Constants& constants = builtin_constants());

}  // namespace dzeta
