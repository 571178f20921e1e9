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

#include "dzeta/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dzeta/errors.hpp"
#include "support/frozen_values.hpp"
#include "support/naive_oracle.hpp"

namespace dzeta {
namespace {

using std::numbers::pi;

TEST(Cpow, ExactSmallCases) {
  EXPECT_EQ(cpow(1.0, {2.0, 3.0}), Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(cpow(4.0, {2.0, 0.0}).real(), 0.0625);
  EXPECT_EQ(cpow(4.0, {2.0, 0.0}).imag(), 0.0);
  EXPECT_NEAR(std::abs(cpow(7.0, {0.0, 5.0})), 1.0, 1e-14);
}

TEST(Cpow, RejectsNonPositiveBase) {
  EXPECT_THROW(cpow(0.0, {1.0, 0.0}), DomainError);
  EXPECT_THROW(cpow(-2.0, {1.0, 0.0}), DomainError);
}

TEST(Cpow, Multiplicative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> base(1.0, 1e4), part(-14.0, 14.0);
  for (int i = 0; i < 2000; ++i) {
    const double m = std::floor(base(rng)), n = std::floor(base(rng));
    const Complex s(part(rng), part(rng));
    if (std::abs(s) > 20.0) continue;
    const Complex lhs = cpow(m * n, s);
    const Complex rhs = cpow(m, s) * cpow(n, s);
    EXPECT_LE(std::abs(lhs - rhs), 1e-13 * std::abs(lhs)) << m << " " << n << " " << s;
  }
}

TEST(Cpow, ConjugateSymmetry) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> base(1.0, 1e6), part(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double n = base(rng);
    const Complex s(part(rng), part(rng));
    const Complex a = cpow(n, std::conj(s));
    const Complex b = std::conj(cpow(n, s));
    EXPECT_EQ(a, b);
  }
}

TEST(Cpow, ModulusConsistent) {
  const Complex z = cpow(12.5, {1.3, -7.25});
  EXPECT_NEAR(std::norm(z), z.real() * z.real() + z.imag() * z.imag(), 1e-30);
  EXPECT_NEAR(std::abs(z), std::pow(12.5, -1.3), 1e-16);
}

TEST(LogGamma, Factorials) {
  EXPECT_NEAR(std::abs(log_gamma(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(log_gamma(5.0).real(), std::log(24.0), 1e-14);
  double fact = 1.0;
  for (int n = 1; n <= 25; ++n) {
    if (n > 1) fact *= n - 1;
    EXPECT_NEAR(log_gamma(static_cast<double>(n)).real(), std::log(fact), 1e-13 * (1 + std::log(fact)));
  }
}

TEST(LogGamma, FrozenValues) {
  const Complex a = log_gamma({2.5, 1.5});
  EXPECT_NEAR(a.real(), frozen::kLogGamma_2_5_1_5[0], 1e-12);
  EXPECT_NEAR(a.imag(), frozen::kLogGamma_2_5_1_5[1], 1e-12);
  const Complex b = log_gamma({0.3, 40.0});
  EXPECT_NEAR(b.real(), frozen::kLogGamma_0_3_40[0], 1e-11);
  EXPECT_NEAR(b.imag(), frozen::kLogGamma_0_3_40[1], 1e-11);
}

TEST(LogGamma, Recurrence) {
  for (const Complex z : {Complex(0.2, 0.1), Complex(1.7, -3.0), Complex(3.0, 12.0)}) {
    const Complex lhs = log_gamma(z + 1.0);
    const Complex rhs = log_gamma(z) + std::log(z);
    // Equal up to a multiple of 2 pi i on the principal branch.
    const double turns = std::round((lhs - rhs).imag() / (2 * pi));
    EXPECT_NEAR(std::abs(lhs - rhs - Complex(0, 2 * pi * turns)), 0.0, 1e-12);
  }
}

TEST(LogGamma, ReflectionOfHalf) {
  EXPECT_NEAR(log_gamma(0.5).real(), 0.5 * std::log(pi), 1e-14);
}

TEST(LogGamma, Domain) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma({-1.0, 2.0}), DomainError);
}

TEST(RiemannZeta, ClassicalValues) {
  const ApproxValue z2 = riemann_zeta_em(2.0, 50, 4);
  EXPECT_NEAR(z2.value.real(), pi * pi / 6, 1e-12);
  EXPECT_LE(std::abs(z2.value - pi * pi / 6), z2.error_bound + 1e-15);
  const ApproxValue z6 = riemann_zeta_em(6.0, 50, 4);
  EXPECT_NEAR(z6.value.real(), std::pow(pi, 6) / 945, 1e-12);
}

TEST(RiemannZeta, SelfConsistentUnderHigherTruncation) {
  const ApproxValue low = riemann_zeta_em({2.0, 3.0}, 100, 6);
  const ApproxValue high = riemann_zeta_em({2.0, 3.0}, 400, 8);
  EXPECT_LE(std::abs(low.value - high.value), std::min(low.error_bound, high.error_bound) + 1e-15);
}

TEST(RiemannZeta, FrozenValues) {
  const ApproxValue a = riemann_zeta_em({2.0, 3.0}, 100, 8);
  EXPECT_NEAR(a.value.real(), frozen::kZeta_2_3[0], 1e-13);
  EXPECT_NEAR(a.value.imag(), frozen::kZeta_2_3[1], 1e-13);
  const ApproxValue b = riemann_zeta_em({1.55, 40.0}, 200, 8);
  EXPECT_NEAR(b.value.real(), frozen::kZeta_1_55_40[0], 1e-12);
  EXPECT_NEAR(b.value.imag(), frozen::kZeta_1_55_40[1], 1e-12);
  EXPECT_LE(std::abs(b.value - Complex(frozen::kZeta_1_55_40[0], frozen::kZeta_1_55_40[1])),
            b.error_bound + 1e-15);
}

TEST(RiemannZeta, AgreesWithPlainPartialSums) {
  for (const Complex s : {Complex(2.0, 0.0), Complex(2.5, 7.0), Complex(3.0, -20.0)}) {
    const ApproxValue em = riemann_zeta_em(s, 64, 8);
    // The remainder past 10^6 is below 1e-6^{Re s - 1} / (Re s - 1) <= 1e-6.
    const double tail = std::pow(1e6, 1.0 - s.real()) / (s.real() - 1.0);
    const Complex partial = oracle::dirichlet(s, 1'000'000);
    EXPECT_LE(std::abs(em.value - partial), std::max(em.error_bound, 1e-9) + tail) << s;
  }
}

TEST(RiemannZeta, PoleAndDomain) {
  EXPECT_THROW(riemann_zeta_em(1.0, 10, 4), PoleError);
  EXPECT_THROW(riemann_zeta_em(-0.5, 10, 4), DomainError);
  EXPECT_THROW(riemann_zeta_em({0.0, 3.0}, 10, 4), DomainError);
  EXPECT_THROW(riemann_zeta_em(2.0, 0, 4), PreconditionError);
  EXPECT_THROW(riemann_zeta_em(2.0, 10, 9), PreconditionError);
}

TEST(DirichletTail, MatchesZetaMinusPartialSum) {
  const Complex s(2.5, 3.0);
  const ApproxValue tail = dirichlet_tail(s, 100.0);
  const ApproxValue z = riemann_zeta_em(s, 64, 8);
  const Complex expected = z.value - oracle::dirichlet(s, 100);
  EXPECT_LE(std::abs(tail.value - expected), tail.error_bound + z.error_bound + 1e-14);
  EXPECT_THROW(dirichlet_tail(1.0, 10.0), DomainError);
}

class TailIntegralClosedForms : public ::testing::TestWithParam<QuadratureRule> {};

TEST_P(TailIntegralClosedForms, BoundsAreHonest) {
  QuadratureSpec q;
  q.rule = GetParam();
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (const double y : {1.0, 10.0, 100.0}) {
      const double nd = static_cast<double>(n);
      const ApproxValue a = tail_integral(n, y, 0.0, 1.0, q);
      EXPECT_LE(std::abs(a.value - 1.0 / (y + nd)), a.error_bound) << n << " " << y;
      const long double nl = n;
      const long double yl = y;
      const auto exact = static_cast<double>(std::log1p(nl / yl) / (nl * nl) - 1.0L / (nl * (yl + nl)));
      const ApproxValue b = tail_integral(n, y, 1.0, 1.0, q);
      EXPECT_LE(std::abs(b.value - exact), b.error_bound) << n << " " << y;
      EXPECT_GE(b.error_bound, 0.0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllRules, TailIntegralClosedForms,
                         ::testing::Values(QuadratureRule::gauss_legendre_panels,
                                           QuadratureRule::composite_simpson,
                                           QuadratureRule::double_exponential_tail),
                         [](const ::testing::TestParamInfo<QuadratureRule>& info) {
                           std::string name(to_string(info.param));
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name;
                         });

TEST(TailIntegral, StableAcrossMappingsAndResolution) {
  const Complex expected(frozen::kTailIntegral[0], frozen::kTailIntegral[1]);
  for (const auto rule : {QuadratureRule::gauss_legendre_panels, QuadratureRule::composite_simpson,
                          QuadratureRule::double_exponential_tail}) {
    for (const int panels : {16, 32}) {
      QuadratureSpec q;
      q.rule = rule;
      q.panels = panels;
      const ApproxValue v = tail_integral(3, 10.0, {0.5, 2.0}, {0.7, 5.0}, q);
      EXPECT_LE(std::abs(v.value - expected), v.error_bound + 1e-13) << to_string(rule) << " " << panels;
      EXPECT_LE(std::abs(v.value - expected), 1e-8) << to_string(rule) << " " << panels;
    }
  }
}

TEST(TailIntegral, Domain) {
  const QuadratureSpec q;
  EXPECT_THROW(tail_integral(1, 1.0, {-0.5, 0.0}, {0.2, 0.0}, q), DomainError);
  EXPECT_THROW(tail_integral(0, 1.0, 1.0, 1.0, q), PreconditionError);
  EXPECT_THROW(tail_integral(1, 0.5, 1.0, 1.0, q), PreconditionError);
}

TEST(MellinBarnes, ClosedForms) {
  const QuadratureSpec q;
  EXPECT_NEAR(std::abs(mellin_barnes_binomial(1.0, 1.0, -0.5, q) - 0.5), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(mellin_barnes_binomial(2.0, 0.5, -0.5, q) - 1.0 / 2.25), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(mellin_barnes_binomial({1.0, 1.0}, 2.0, -0.5, q) - cpow(3.0, {1.0, 1.0})),
              0.0, 1e-8);
}

TEST(MellinBarnes, Grid) {
  QuadratureSpec q;
  q.abs_tol = 1e-10;
  for (const Complex s : {Complex(0.8, 0.0), Complex(1.5, 2.0), Complex(3.0, -4.0)}) {
    for (const double lambda : {0.1, 1.0, 7.5}) {
      for (const double frac : {0.25, 0.75}) {
        const double c = -frac * s.real();
        const Complex v = mellin_barnes_binomial(s, lambda, c, q);
        EXPECT_LE(std::abs(v - std::pow(1.0 + lambda, -s)), 1e-8) << s << " " << lambda << " " << c;
      }
    }
  }
}

TEST(MellinBarnes, Domain) {
  const QuadratureSpec q;
  EXPECT_THROW(mellin_barnes_binomial(1.0, 1.0, 0.5, q), DomainError);
  EXPECT_THROW(mellin_barnes_binomial(1.0, 1.0, -1.5, q), DomainError);
  EXPECT_THROW(mellin_barnes_binomial(1.0, -1.0, -0.5, q), PreconditionError);
}

TEST(Quadrature, SpecValidation) {
  QuadratureSpec q;
  q.abs_tol = 0.0;
  EXPECT_THROW(q.validate(), PreconditionError);
  q = {};
  q.panels = 1'000'000;
  q.nodes_per_panel = 100;
  EXPECT_THROW(q.validate(), PreconditionError);
  EXPECT_EQ(quadrature_rule_from_string(to_string(QuadratureRule::composite_simpson)),
            QuadratureRule::composite_simpson);
  EXPECT_THROW(quadrature_rule_from_string("trapezoid"), PreconditionError);
}

}  // namespace
}  // namespace dzeta
