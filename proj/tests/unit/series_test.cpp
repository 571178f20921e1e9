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

#include "dzeta/series.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dzeta/errors.hpp"
#include "dzeta/parallel.hpp"
#include "support/frozen_values.hpp"
#include "support/naive_oracle.hpp"

namespace dzeta {
namespace {

const ZetaArgs k222{2.0, 2.0, 2.0};

TEST(ZetaArgs, Accessors) {
  const ZetaArgs a{{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}};
  EXPECT_EQ(a.sigma1(), 1.0);
  EXPECT_EQ(a.t2(), 4.0);
  EXPECT_EQ(a.sigma_sum(), 9.0);
  EXPECT_EQ(a.swapped().s1, a.s2);
  EXPECT_THROW((ZetaArgs{{NAN, 0.0}, 1.0, 1.0}.validate()), NumericalError);
  EXPECT_THROW((Truncation{1, 1e-10}.validate()), PreconditionError);
  EXPECT_THROW((Truncation{2, 0.0}.validate()), PreconditionError);
}

TEST(Av2Direct, SingleTermAtCutoffTwo) {
  const ApproxValue v = av2_direct(k222, Truncation{2, 1e-10});
  EXPECT_DOUBLE_EQ(v.value.real(), 1.0 / 36.0);
  EXPECT_EQ(v.value.imag(), 0.0);
}

TEST(Mt2Direct, FirstTerm) {
  EXPECT_DOUBLE_EQ(mt2_partial_sum(k222, 1).real(), 0.25);
}

TEST(Av2Direct, ClosedFormAndBruteForce) {
  const ApproxValue v = av2_direct(k222, 1e-10);
  EXPECT_LE(v.error_bound, 1e-10);
  EXPECT_EQ(v.rigor, Rigor::rigorous);
  EXPECT_LE(std::abs(v.value - frozen::kAV_2_2_2), v.error_bound + 1e-14);
  const std::int64_t M = 3000;
  const Complex brute = oracle::av2(2.0, 2.0, 2.0, M);
  EXPECT_LE(std::abs(v.value - brute), v.error_bound + av2_tail_majorant(k222, M));
  EXPECT_LE(std::abs(v.value - brute), 1e-9);
}

TEST(Av2Direct, ComplexCaseWithinCombinedBounds) {
  const ZetaArgs a{{1.2, 1.0}, 1.3, 1.1};
  const ApproxValue v = av2_direct(a, 1e-8);
  const std::int64_t M = 4000;
  const Complex brute = oracle::av2(a.s1, a.s2, a.s3, M);
  EXPECT_LE(std::abs(v.value - brute), v.error_bound + av2_tail_majorant(a, M));
}

TEST(Mt2Direct, ClosedFormAndBruteForce) {
  const ApproxValue v = mt2_direct(k222, 1e-10);
  EXPECT_LE(v.error_bound, 1e-10);
  EXPECT_LE(std::abs(v.value - frozen::kMT_2_2_2), v.error_bound + 1e-14);
  const std::int64_t M = 2000;
  const Complex brute = oracle::mt2(2.0, 2.0, 2.0, M);
  EXPECT_LE(std::abs(v.value - brute), v.error_bound + mt2_tail_majorant(k222, M));
  EXPECT_LE(std::abs(v.value - brute), 1e-9);
}

TEST(Mt2Direct, SlowCaseWithinCombinedBounds) {
  const ZetaArgs a{1.5, 1.5, 1.5};
  const ApproxValue v = mt2_direct(a, 1e-8);
  const std::int64_t M = 2000;
  const Complex brute = oracle::mt2(a.s1, a.s2, a.s3, M);
  EXPECT_LE(std::abs(v.value - brute), v.error_bound + mt2_tail_majorant(a, M));
}

TEST(PartialSums, MatchNaiveSummationAtEqualCutoff) {
  const ZetaArgs a{{1.3, -2.0}, {0.4, 3.5}, {1.1, 17.0}};
  for (const std::int64_t M : {2, 3, 17, 500, 5000}) {
    const Complex av = av2_partial_sum(a, M);
    const Complex mt = mt2_partial_sum(a, M);
    EXPECT_LE(std::abs(av - oracle::av2(a.s1, a.s2, a.s3, M)), 1e-13 * (1 + std::abs(av))) << M;
    EXPECT_LE(std::abs(mt - oracle::mt2(a.s1, a.s2, a.s3, M)), 1e-13 * (1 + std::abs(mt))) << M;
  }
}

TEST(PartialSums, IndependentOfThreadCount) {
  const ZetaArgs a{{1.1, 0.5}, 1.2, {1.3, 9.0}};
  const unsigned saved = thread_count();
  set_thread_count(1);
  const Complex av1 = av2_partial_sum(a, 20000);
  const Complex mt1 = mt2_partial_sum(a, 9000);
  set_thread_count(4);
  const Complex av4 = av2_partial_sum(a, 20000);
  const Complex mt4 = mt2_partial_sum(a, 9000);
  set_thread_count(saved);
  EXPECT_EQ(av1, av4);
  EXPECT_EQ(mt1, mt4);
}

TEST(Av2Direct, MonotoneRefinement) {
  for (const std::int64_t M : {50, 100, 200, 400, 800}) {
    const ApproxValue v = av2_direct(k222, Truncation{M, 1e-10});
    EXPECT_LE(std::abs(v.value - frozen::kAV_2_2_2), v.error_bound) << M;
  }
}

TEST(Av2Direct, ConjugateSymmetry) {
  const ZetaArgs a{{1.4, 2.0}, {0.9, -1.0}, {1.2, 6.0}};
  const ApproxValue v = av2_direct(a, 1e-6);
  const ApproxValue w = av2_direct(a.conjugated(), 1e-6);
  EXPECT_LE(std::abs(w.value - std::conj(v.value)), 1e-12);
}

TEST(Mt2Direct, SymmetricInFirstTwoArguments) {
  const ZetaArgs a{{1.4, 2.0}, {1.9, -1.0}, {0.8, 6.0}};
  const ApproxValue v = mt2_direct(a, 1e-7);
  const ApproxValue w = mt2_direct(a.swapped(), 1e-7);
  EXPECT_LE(std::abs(v.value - w.value), v.error_bound + w.error_bound);
}

TEST(DirectSeries, TailBoundsAreHonest) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> sig(0.2, 2.5), tpart(-20.0, 20.0);
  std::uniform_int_distribution<std::int64_t> cut(20, 300);
  int checked = 0;
  while (checked < 50) {
    const double x1 = sig(rng), x2 = sig(rng), x3 = sig(rng);
    const ZetaArgs a{{x1, tpart(rng)}, {x2, tpart(rng)}, {x3, tpart(rng)}};
    const bool mt = checked % 2 == 1;
    try {
      mt ? check_mt2_region(a) : check_av2_region(a);
    } catch (const RegionError&) {
      continue;
    }
    const std::int64_t M = cut(rng);
    const ApproxValue coarse = mt ? mt2_direct(a, Truncation{M, 1e-6}) : av2_direct(a, Truncation{M, 1e-6});
    const ApproxValue fine =
        mt ? mt2_direct(a, Truncation{4 * M, 1e-6}) : av2_direct(a, Truncation{4 * M, 1e-6});
    EXPECT_LE(std::abs(coarse.value - fine.value), coarse.error_bound)
        << (mt ? "mt " : "av ") << a.s1 << a.s2 << a.s3 << " M=" << M;
    ++checked;
  }
}

TEST(DirectSeries, RegionErrorsNameTheInequality) {
  try {
    av2_direct({0.3, 1.0, 0.5}, 1e-8);
    FAIL() << "expected RegionError";
  } catch (const RegionError& e) {
    EXPECT_EQ(e.inequality(), "sigma1 + sigma3 > 1");
  }
  try {
    mt2_direct({1.0, 0.2, 0.5}, 1e-8);
    FAIL() << "expected RegionError";
  } catch (const RegionError& e) {
    EXPECT_EQ(e.inequality(), "sigma2 + sigma3 > 1");
  }
  EXPECT_THROW(av2_direct({0.6, 0.5, 0.6}, 1e-8), RegionError);
}

TEST(DirectSeries, ClampedCutoffIsHeuristic) {
  SeriesLimits tight;
  tight.max_terms = 10'000;
  const ApproxValue v = av2_direct({1.5, 1.5, 1.5}, 1e-12, tight);
  EXPECT_EQ(v.rigor, Rigor::heuristic);
  EXPECT_LE(v.terms, 10'000);
}

TEST(SquareSeries, TrivialTruncations) {
  EXPECT_DOUBLE_EQ(av2_sq(2.0, 2.0, 4.0, Truncation{3, 1e-10}).value.real(), 1.0 / 1296.0);
  EXPECT_EQ(av2_sq(2.0, 2.0, 4.0, Truncation{2, 1e-10}).value.real(), 0.0);
  EXPECT_DOUBLE_EQ(mt2_sq(2.0, 2.0, 4.0, Truncation{2, 1e-10}).value.real(), 0.0625);
}

TEST(SquareSeries, BruteForceWithinCombinedBounds) {
  {
    const ApproxValue v = av2_sq(0.5, 1.6, 0.8, 1e-8);
    const std::int64_t K = 3000;
    const double brute = oracle::square_series(0.5, 1.6, 0.8, K, true);
    EXPECT_LE(std::abs(v.value.real() - brute), v.error_bound + av2_sq_tail_majorant(0.5, 1.6, 0.8, K));
  }
  {
    const ApproxValue v = mt2_sq(2.0, 2.0, 4.0, 1e-10);
    const std::int64_t K = 2000;
    const double brute = oracle::square_series(2.0, 2.0, 4.0, K, false);
    EXPECT_LE(std::abs(v.value.real() - brute), v.error_bound + mt2_sq_tail_majorant(2.0, 2.0, 4.0, K));
    EXPECT_LE(std::abs(v.value.real() - brute), 1e-9);
  }
  {
    const ApproxValue v = mt2_sq(0.55, 0.55, 0.9, 1e-6);
    const std::int64_t K = 2000;
    const double brute = oracle::square_series(0.55, 0.55, 0.9, K, false);
    EXPECT_LE(std::abs(v.value.real() - brute), v.error_bound + mt2_sq_tail_majorant(0.55, 0.55, 0.9, K));
  }
}

TEST(SquareSeries, PartialSumsMatchNaive) {
  for (const std::int64_t K : {2, 3, 10, 777}) {
    const Complex s1(0.7, 1.5), s2(1.2, -0.5);
    const double av = av2_sq_partial_sum(s1, s2, 1.3, K);
    const double mt = mt2_sq_partial_sum(s1, s2, 1.3, K);
    EXPECT_NEAR(av, oracle::square_series(s1, s2, 1.3, K, true), 1e-13 * (1 + av)) << K;
    EXPECT_NEAR(mt, oracle::square_series(s1, s2, 1.3, K, false), 1e-13 * (1 + mt)) << K;
  }
}

TEST(SquareSeries, NonNegativeAndReal) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> part(0.6, 2.0), tpart(-5.0, 5.0);
  for (int i = 0; i < 20; ++i) {
    const Complex s1(part(rng), tpart(rng)), s2(part(rng), tpart(rng));
    const double sigma = part(rng);
    const ApproxValue a = av2_sq(s1, s2, sigma, Truncation{200, 1e-6});
    const ApproxValue b = mt2_sq(s1, s2, sigma, Truncation{200, 1e-6});
    EXPECT_GE(a.value.real(), 0.0);
    EXPECT_GE(b.value.real(), 0.0);
    EXPECT_EQ(a.value.imag(), 0.0);
    EXPECT_EQ(b.value.imag(), 0.0);
  }
}

TEST(SquareSeries, RegionChecks) {
  EXPECT_THROW(av2_sq(0.1, 0.5, 0.7, 1e-8), RegionError);
  EXPECT_THROW(mt2_sq(0.1, 2.0, 0.7, 1e-8), RegionError);
}

TEST(Extrapolation, RecoversExactPowerLaws) {
  const std::vector<double> e = {0.7, 1.7, 2.4};
  std::vector<double> K, S;
  for (double k : {4096.0, 2048.0, 1024.0, 512.0}) {
    K.push_back(k);
    S.push_back(3.25 + 2.0 * std::pow(k, -e[0]) - 5.0 * std::pow(k, -e[1]) + 0.5 * std::pow(k, -e[2]));
  }
  EXPECT_NEAR(extrapolate_power_tail(K, S, e), 3.25, 1e-12);
}

TEST(Extrapolation, ClampedSquareSeriesAgreesAcrossCaps) {
  SeriesLimits small, large;
  small.max_terms = 20'000'000;
  large.max_terms = 80'000'000;
  const ApproxValue a = av2_sq(0.5, 1.6, 0.8, 1e-10, small);
  const ApproxValue b = av2_sq(0.5, 1.6, 0.8, 1e-10, large);
  EXPECT_EQ(a.rigor, Rigor::heuristic);
  EXPECT_LE(std::abs(a.value - b.value), a.error_bound + b.error_bound);
}

}  // namespace
}  // namespace dzeta
