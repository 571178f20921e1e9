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

#include "dzeta/quadrature.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

// n^{-s} = exp(-s log n). Note the sign: every series term needs the
// reciprocal power, so that is what this returns. Throws DomainError for
// n <= 0.
Complex cpow(double n, Complex s);

// Principal branch of log Gamma(z) for Re(z) > 0: argument shifted up to
// Re(z) >= 8 by the recurrence, then a 10-term Stirling series.
Complex log_gamma(Complex z);

// Bernoulli number B_{2k} for 1 <= k <= 10.
double bernoulli_2k(int k);

// Riemann zeta by Euler-Maclaurin summation with cutoff N:
//   sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + sum_{j<=order} T_j(N)
// with Backlund's bound on the remainder. Requires Re(s) > 0, s != 1 and
// correction_order <= 8. For accurate results use N >= 2(1 + |Im s|).
ApproxValue riemann_zeta_em(Complex s, std::int64_t cutoff, int correction_order);

// sum_{n > x} n^{-s} for Re(s) > 1, by direct summation up to a cutoff large
// enough for Euler-Maclaurin to converge, then the Euler-Maclaurin tail.
ApproxValue dirichlet_tail(Complex s, double x, int correction_order = 8);

// int_y^oo u^{-s1} (u+n)^{-s3-1} du for Re(s1 + s3) > 0, y >= 1, n >= 1.
// The gauss-legendre-panels and composite-simpson rules integrate on the
// logarithmic scale u = y e^x; double-exponential-tail uses the rational
// map u = y / (1 - v) with tanh-sinh panels. The range is cut at U where the
// analytic tail bound is below abs_tol / 10; error_bound adds a quadrature
// residual estimate (coarse vs refined) to that bound.
ApproxValue tail_integral(std::int64_t n, double y, Complex s1, Complex s3,
                          const QuadratureSpec& quad);

// (1 + lambda)^{-s} computed from its Mellin-Barnes contour integral along
// Re(z) = c. Exists to validate the contour quadrature; requires Re(s) > 0,
// -Re(s) < c < 0 and lambda > 0.
Complex mellin_barnes_binomial(Complex s, double lambda, double c,
                               const QuadratureSpec& quad);

}  // namespace dzeta
