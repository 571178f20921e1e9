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

#include "dzeta/types.hpp"

namespace dzeta {

struct ZetaArgs {
  Complex s1;
  Complex s2;
  Complex s3;

  double sigma1() const { return s1.real(); }
  double sigma2() const { return s2.real(); }
  double sigma3() const { return s3.real(); }
  double t1() const { return s1.imag(); }
  double t2() const { return s2.imag(); }
  double t3() const { return s3.imag(); }
  double sigma_sum() const { return sigma1() + sigma2() + sigma3(); }

  ZetaArgs swapped() const { return {s2, s1, s3}; }
  ZetaArgs conjugated() const { return {std::conj(s1), std::conj(s2), std::conj(s3)}; }

  // Throws NumericalError if any component is not finite.
  void validate() const;
};

// Explicit outer cutoff M (cutoff >= 2).
struct Truncation {
  std::int64_t cutoff = 2;
  double requested_eps = 1e-10;

  void validate() const;
};

// Work caps applied when a cutoff is chosen from eps. A clamped cutoff
// downgrades rigor to heuristic.
struct SeriesLimits {
  std::int64_t max_outer = 10'000'000;
  // Cap on (m, n) pairs or (k, m) pairs of one evaluation.
  std::int64_t max_terms = 2'000'000'000;
  // Partial sums at K, K/2, ..., K/2^levels feed the tail extrapolation of
  // clamped square series.
  int extrapolation_levels = 4;
};

// Region checks; throw RegionError naming the first violated inequality.
void check_av2_region(const ZetaArgs& a);
void check_mt2_region(const ZetaArgs& a);
void check_av2_sq_region(Complex s1, Complex s2, double sigma);
void check_mt2_sq_region(Complex s1, Complex s2, double sigma);

// Finite sums without any tail handling, valid for every argument:
//   av2: sum_{m<=M} sum_{n<m} m^{-s1} n^{-s2} (m+n)^{-s3}
//   mt2: sum_{m<=M} sum_{n<=M} m^{-s1} n^{-s2} (m+n)^{-s3}
// Blocks of 4096 outer indices are summed in parallel with compensated
// accumulation and reduced in block order, so results do not depend on the
// thread count.
Complex av2_partial_sum(const ZetaArgs& a, std::int64_t M);
Complex mt2_partial_sum(const ZetaArgs& a, std::int64_t M);

// Integral-test majorants of the discarded tails (args must be in region).
double av2_tail_majorant(const ZetaArgs& a, std::int64_t M);
double mt2_tail_majorant(const ZetaArgs& a, std::int64_t M);

ApproxValue av2_direct(const ZetaArgs& a, double eps, const SeriesLimits& limits = {});
ApproxValue av2_direct(const ZetaArgs& a, const Truncation& trunc);
ApproxValue mt2_direct(const ZetaArgs& a, double eps, const SeriesLimits& limits = {});
ApproxValue mt2_direct(const ZetaArgs& a, const Truncation& trunc);

// Square series sum_{k<=K} |c_k|^2 k^{-sigma} with
//   av2: c_k = sum_{k/2<m<=k-1} m^{-s1} (k-m)^{-s2}
//   mt2: c_k = sum_{1<=m<=k-1} m^{-s1} (k-m)^{-s2}
// The returned value has imaginary part exactly 0.
double av2_sq_partial_sum(Complex s1, Complex s2, double sigma, std::int64_t K);
double mt2_sq_partial_sum(Complex s1, Complex s2, double sigma, std::int64_t K);
double av2_sq_tail_majorant(Complex s1, Complex s2, double sigma, std::int64_t K);
double mt2_sq_tail_majorant(Complex s1, Complex s2, double sigma, std::int64_t K);

// When the cutoff needed for eps exceeds the caps, the sum is taken to the
// cap and, for real s1 and s2, the tail is extrapolated from partial sums at
// K/2^j using the known power-law ladder of the tail; the error estimate is
// the spread between fits of consecutive orders. Rigor is then heuristic.
ApproxValue av2_sq(Complex s1, Complex s2, double sigma, double eps,
                   const SeriesLimits& limits = {});
ApproxValue av2_sq(Complex s1, Complex s2, double sigma, const Truncation& trunc);
ApproxValue mt2_sq(Complex s1, Complex s2, double sigma, double eps,
                   const SeriesLimits& limits = {});
ApproxValue mt2_sq(Complex s1, Complex s2, double sigma, const Truncation& trunc);

// Generalized Richardson extrapolation: given partial sums S(K_j) and tail
// exponents e_i > 0 (S(K) = S_inf + sum_i A_i K^{-e_i}), returns S_inf from
// the first exponents.size() + 1 samples. Exposed for testing.
double extrapolate_power_tail(const std::vector<double>& K,
                              const std::vector<double>& S,
                              const std::vector<double>& exponents);

}  // namespace dzeta
