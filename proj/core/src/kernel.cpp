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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "dzeta/errors.hpp"
#include "dzeta/summation.hpp"

namespace dzeta {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_20 as exact rationals.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,      1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,  7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0};

constexpr int kMaxCorrectionOrder = 8;

// Euler-Maclaurin tail sum_{n>=N} n^{-s} with its Backlund remainder bound.
ApproxValue em_tail(Complex s, std::int64_t N, int order) {
  const double nd = static_cast<double>(N);
  const Complex n_pow = cpow(nd, s);  // N^{-s}
  ComplexCompensatedSum acc;
  acc.add(nd * n_pow / (s - 1.0));
  acc.add(0.5 * n_pow);

  // T_j = B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
  Complex rising = s;
  Complex power = n_pow / nd;
  double factorial = 2.0;
  for (int j = 1; j <= order; ++j) {
    acc.add(kBernoulli[j - 1] / factorial * rising * power);
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    power /= nd * nd;
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  // |s(s+1)...(s+2k+1) B_{2k+2} N^{-sigma-2k-1} / ((2k+2)! (sigma+2k+1))|
  const double sigma = s.real();
  const double bound = std::abs(rising * (s + (2.0 * order + 1.0))) *
                       std::abs(kBernoulli[order]) / factorial * std::abs(power) /
                       (sigma + 2.0 * order + 1.0);
  ApproxValue out;
  out.value = acc.value();
  out.error_bound = bound + 8.0 * kEps * std::abs(out.value);
  out.rigor = Rigor::rigorous;
  out.cutoff = N;
  return out;
}

void check_order(int order) {
  if (order < 0 || order > kMaxCorrectionOrder) {
    throw PreconditionError("0 <= correction_order <= 8",
                            "correction_order = " + std::to_string(order));
  }
}

}  // namespace

std::string_view to_string(Rigor r) {
  return r == Rigor::rigorous ? "rigorous" : "heuristic";
}

ApproxValue combine(const ApproxValue& a, const ApproxValue& b) {
  ApproxValue out;
  out.value = a.value + b.value;
  out.error_bound = a.error_bound + b.error_bound;
  out.rigor = (a.rigor == Rigor::rigorous && b.rigor == Rigor::rigorous)
                  ? Rigor::rigorous
                  : Rigor::heuristic;
  out.cutoff = std::max(a.cutoff, b.cutoff);
  out.terms = a.terms + b.terms;
  return out;
}

void require_finite(Complex z, std::string_view what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NumericalError(fmt::format("non-finite value in {}", what));
  }
}

void require_finite(double x, std::string_view what) {
  if (!std::isfinite(x)) {
    throw NumericalError(fmt::format("non-finite value in {}", what));
  }
}

Complex cpow(double n, Complex s) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError(fmt::format("cpow: base must be positive and finite, got {}", n));
  }
  require_finite(s, "cpow exponent");
  const double modulus = std::pow(n, -s.real());
  const double phase = -s.imag() * std::log(n);
  return {modulus * std::cos(phase), modulus * std::sin(phase)};
}

Complex log_gamma(Complex z) {
  require_finite(z, "log_gamma argument");
  if (z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real()) {
    throw PoleError(fmt::format("log_gamma: pole at {}", z.real()));
  }
  if (!(z.real() > 0.0)) {
    throw DomainError("log_gamma: implemented for Re(z) > 0 only");
  }
  Complex shift = 0.0;
  while (z.real() < 8.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (int k = 1; k <= 10; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  const Complex result = (z - 0.5) * std::log(z) - z +
                         0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
  require_finite(result, "log_gamma");
  return result;
}

double bernoulli_2k(int k) {
  if (k < 1 || k > static_cast<int>(kBernoulli.size())) {
    throw PreconditionError("1 <= k <= 10", "bernoulli_2k(" + std::to_string(k) + ")");
  }
  return kBernoulli[k - 1];
}

ApproxValue riemann_zeta_em(Complex s, std::int64_t cutoff, int correction_order) {
  require_finite(s, "riemann_zeta_em argument");
  if (std::abs(s - 1.0) < 1e-12) {
    throw PoleError("zeta has a pole at s = 1");
  }
  if (!(s.real() > 0.0)) {
    throw DomainError(fmt::format(
        "riemann_zeta_em implemented for Re(s) > 0 only (Re(s) = {})", s.real()));
  }
  if (cutoff < 1) {
    throw PreconditionError("cutoff >= 1", "cutoff = " + std::to_string(cutoff));
  }
  check_order(correction_order);

  ComplexCompensatedSum partial;
  for (std::int64_t n = 1; n < cutoff; ++n) partial.add(cpow(static_cast<double>(n), s));
  ApproxValue tail = em_tail(s, cutoff, correction_order);
  ApproxValue out;
  ComplexCompensatedSum total = partial;
  total.add(tail.value);
  out.value = total.value();
  out.error_bound = tail.error_bound + 8.0 * kEps * std::abs(out.value);
  out.rigor = Rigor::rigorous;
  out.cutoff = cutoff;
  out.terms = cutoff;
  require_finite(out.value, "riemann_zeta_em");
  return out;
}

ApproxValue dirichlet_tail(Complex s, double x, int correction_order) {
  require_finite(s, "dirichlet_tail argument");
  if (!(s.real() > 1.0)) {
    throw DomainError("dirichlet_tail requires Re(s) > 1");
  }
  check_order(correction_order);
  const auto first = static_cast<std::int64_t>(std::floor(std::max(0.0, x))) + 1;
  const auto em_start = std::max<std::int64_t>(
      first, static_cast<std::int64_t>(std::ceil(std::abs(s))) + 2 * correction_order + 2);
  ComplexCompensatedSum partial;
  for (std::int64_t n = first; n < em_start; ++n) partial.add(cpow(static_cast<double>(n), s));
  ApproxValue tail = em_tail(s, em_start, correction_order);
  partial.add(tail.value);
  tail.value = partial.value();
  tail.terms = em_start - first;
  require_finite(tail.value, "dirichlet_tail");
  return tail;
}

namespace {

// Integrand of tail_integral on the logarithmic scale u = y e^x, including
// the Jacobian u: u^{1-s1} (u+n)^{-s3-1}.
struct LogScaleIntegrand {
  double log_y;
  double n_over_y;
  Complex one_minus_s1;
  Complex s3_plus_1;

  Complex operator()(double x) const {
    const double log_u = log_y + x;
    const double log_u_plus_n = log_u + std::log1p(n_over_y * std::exp(-x));
    return std::exp(one_minus_s1 * log_u - s3_plus_1 * log_u_plus_n);
  }
};

// Same integrand in w = 1 - v with u = y / w: (y / w^2) u^{-s1} (u+n)^{-s3-1}.
struct RationalMapIntegrand {
  double y;
  double n;
  Complex s1;
  Complex s3_plus_1;

  Complex operator()(double w) const {
    const double u = y / w;
    const double log_u = std::log(u);
    return (u / w) * std::exp(-s1 * log_u - s3_plus_1 * std::log(u + n));
  }
};

}  // namespace

ApproxValue tail_integral(std::int64_t n, double y, Complex s1, Complex s3,
                          const QuadratureSpec& quad) {
  quad.validate();
  require_finite(s1, "tail_integral s1");
  require_finite(s3, "tail_integral s3");
  if (n < 1) throw PreconditionError("n >= 1", "n = " + std::to_string(n));
  if (!(y >= 1.0) || !std::isfinite(y)) {
    throw PreconditionError("y >= 1", fmt::format("y = {}", y));
  }
  const double sigma = s1.real() + s3.real();
  if (!(sigma > 0.0)) {
    throw DomainError(fmt::format(
        "tail_integral diverges: needs Re(s1) + Re(s3) > 0, got {}", sigma));
  }

  // For u >= n, (u+n)^{-sigma3-1} <= c u^{-sigma3-1}, so the part beyond U is
  // at most c U^{-sigma} / sigma. That fixes U; the part beyond U is then
  // replaced by int_U^oo u^{-s1-s3-1} du, whose error is bounded through
  // |(u+n)^{-s3-1} - u^{-s3-1}| <= |s3+1| n c2 u^{-sigma3-2}.
  const double c = std::max(1.0, std::pow(2.0, -(s3.real() + 1.0)));
  const double c2 = std::max(1.0, std::pow(2.0, -(s3.real() + 2.0)));
  const double log_y = std::log(y);
  const double log_u_floor = std::log(std::max(y, static_cast<double>(n)));
  const double log_u_needed = -std::log(quad.abs_tol * sigma / (10.0 * c)) / sigma;
  const double log_u_max = std::max({log_u_floor, log_u_needed, log_y + 1.0});
  const double span = log_u_max - log_y;
  const Complex s13 = s1 + s3;
  const Complex tail_value = std::exp(-s13 * log_u_max) / s13;
  const double tail_bound = std::abs(s3 + 1.0) * static_cast<double>(n) * c2 *
                            std::exp(-(sigma + 1.0) * log_u_max) / (sigma + 1.0);

  const double omega = std::abs(s1.imag()) + std::abs(s3.imag());
  const double decay = std::abs(1.0 - s1.real()) + std::abs(s3.real() + 1.0);
  const double per_unit = std::max({1.0, omega / std::numbers::pi, decay / 2.0});

  ApproxValue out;
  out.rigor = Rigor::heuristic;
  Complex coarse;
  Complex fine;

  if (quad.rule == QuadratureRule::double_exponential_tail) {
    const RationalMapIntegrand f{y, static_cast<double>(n), s1, s3 + 1.0};
    const double w_min = std::exp(log_y - log_u_max);
    const int split = std::max(1, static_cast<int>(std::ceil(omega * std::numbers::ln2 /
                                                             std::numbers::pi)));
    const double h = 4.0 / quad.nodes_per_panel;
    const auto pieces = static_cast<std::int64_t>(
        std::ceil(-std::log2(w_min))) * split;
    const auto nodes_per_piece =
        static_cast<std::int64_t>(2.0 * std::ceil(3.5 / h) + 1.0);
    if (3 * pieces * nodes_per_piece > quad.max_evaluations) {
      throw NumericalError("tail_integral: quadrature budget exceeded");
    }
    ComplexCompensatedSum acc_coarse;
    ComplexCompensatedSum acc_fine;
    double hi = 1.0;
    while (hi > w_min) {
      const double lo = std::max(0.5 * hi, w_min);
      for (int q = 0; q < split; ++q) {
        const double a = lo + (hi - lo) * q / split;
        const double b = (q + 1 == split) ? hi : lo + (hi - lo) * (q + 1) / split;
        acc_coarse.add(integrate_tanh_sinh(f, a, b, h));
        acc_fine.add(integrate_tanh_sinh(f, a, b, 0.5 * h));
      }
      hi = lo;
    }
    coarse = acc_coarse.value();
    fine = acc_fine.value();
  } else {
    const LogScaleIntegrand f{log_y, static_cast<double>(n) / y, 1.0 - s1, s3 + 1.0};
    const int panels = std::max(
        quad.panels, static_cast<int>(std::ceil(span * per_unit)));
    if (3.0 * panels * quad.nodes_per_panel > static_cast<double>(quad.max_evaluations)) {
      throw NumericalError("tail_integral: quadrature budget exceeded");
    }
    if (quad.rule == QuadratureRule::gauss_legendre_panels) {
      coarse = integrate_gauss_legendre(f, 0.0, span, panels, quad.nodes_per_panel);
      fine = integrate_gauss_legendre(f, 0.0, span, 2 * panels, quad.nodes_per_panel);
    } else {
      coarse = integrate_simpson(f, 0.0, span, panels, quad.nodes_per_panel);
      fine = integrate_simpson(f, 0.0, span, 2 * panels, quad.nodes_per_panel);
    }
  }

  out.value = fine + tail_value;
  out.error_bound =
      std::abs(fine - coarse) + tail_bound + 64.0 * kEps * std::abs(out.value);
  require_finite(out.value, "tail_integral");
  return out;
}

Complex mellin_barnes_binomial(Complex s, double lambda, double c,
                               const QuadratureSpec& quad) {
  quad.validate();
  require_finite(s, "mellin_barnes_binomial s");
  if (!(s.real() > 0.0)) {
    throw DomainError("mellin_barnes_binomial requires Re(s) > 0");
  }
  if (!(c < 0.0 && c > -s.real())) {
    throw DomainError(fmt::format(
        "mellin_barnes_binomial: contour outside the strip -Re(s) < c < 0 (c = {}, Re(s) = {})", c,
        s.real()));
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw PreconditionError("lambda > 0", fmt::format("lambda = {}", lambda));
  }

  const Complex log_gamma_s = log_gamma(s);
  const double log_lambda = std::log(lambda);
  auto integrand = [&](double y) {
    const Complex z{c, y};
    return std::exp(log_gamma(s + z) + log_gamma(-z) - log_gamma_s + z * log_lambda) /
           (2.0 * std::numbers::pi);
  };

  // |Gamma(s+z) Gamma(-z)| decays like exp(-pi |y|) away from the two peaks
  // at y = -Im(s) and y = 0; walk outwards until the integrand and the
  // exponential tail beyond it drop below abs_tol / 10.
  const double target = quad.abs_tol / 10.0;
  auto walk = [&](double start, double step) {
    double y = start;
    for (int i = 0; i < 10000; ++i, y += step) {
      if (std::abs(integrand(y)) * (2.0 / std::numbers::pi) < target) return y;
    }
    throw NumericalError("mellin_barnes_binomial: contour truncation did not converge");
  };
  const double hi = walk(std::max(0.0, -s.imag()) + 1.0, 1.0);
  const double lo = walk(std::min(0.0, -s.imag()) - 1.0, -1.0);

  const int panels = std::max(quad.panels, static_cast<int>(std::ceil((hi - lo) / 0.5)));
  if (static_cast<double>(panels) * quad.nodes_per_panel >
      static_cast<double>(quad.max_evaluations)) {
    throw NumericalError("mellin_barnes_binomial: quadrature budget exceeded");
  }
  const Complex result =
      integrate_gauss_legendre(integrand, lo, hi, panels, quad.nodes_per_panel);
  require_finite(result, "mellin_barnes_binomial");
  return result;
}

}  // namespace dzeta
