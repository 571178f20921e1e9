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

#include "dzeta/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "dot_kernel.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/kernel.hpp"
#include "dzeta/summation.hpp"

namespace dzeta {
namespace {

constexpr double kBoundaryTolerance = 1e-9;

void require(bool ok, const char* inequality, const std::string& detail) {
  if (!ok) throw PreconditionError(inequality, detail);
}

void require_off_hyperplane(Complex value, Complex target, const char* inequality) {
  if (std::abs(value - target) < kHyperplaneGuard) {
    throw HyperplaneError(inequality,
                          fmt::format("distance {:.3g} is below the guard {:.0e}",
                                      std::abs(value - target), kHyperplaneGuard));
  }
}

void require_t3_at_least_2(const ZetaArgs& a) {
  if (!(a.t3() >= 2.0)) {
    throw DomainError(fmt::format("precondition violated: t3 >= 2 (t3 = {})", a.t3()));
  }
}

std::string values(double lhs, double rhs) {
  return fmt::format("{:.6g} vs {:.6g}", lhs, rhs);
}

std::int64_t floor_cutoff(double x) {
  return static_cast<std::int64_t>(std::floor(x));
}

}  // namespace

void FirstApproxParams::validate() const {
  require(x >= 1.0 && std::isfinite(x), "x >= 1", fmt::format("x = {}", x));
  require(y >= x && std::isfinite(y), "y >= x", fmt::format("x = {}, y = {}", x, y));
  require(C > 1.0 && std::isfinite(C), "C > 1", fmt::format("C = {}", C));
}

bool FirstApproxParams::admissible(const ZetaArgs& a) const {
  return std::abs(a.t3()) <= 2.0 * std::numbers::pi * x / C - std::abs(a.t1());
}

ApproxValue av2_approx_first(const ZetaArgs& a, const FirstApproxParams& p,
                             const QuadratureSpec& quad, const Constants& constants) {
  a.validate();
  p.validate();
  quad.validate();
  const double s1r = a.sigma1();
  const double s3r = a.sigma3();
  require(s1r >= 0.0, "sigma1 >= 0", fmt::format("sigma1 = {}", s1r));
  const double floor3 = std::max(0.0, 2.0 - s1r - a.sigma2());
  require(s3r > floor3, "sigma3 > max(0, 2 - sigma1 - sigma2)", values(s3r, floor3));
  require_off_hyperplane(a.s1 + a.s3, 1.0, "s1 + s3 != 1");
  const bool same_sign = (a.t1() >= 0.0 && a.t3() >= 0.0) || (a.t1() <= 0.0 && a.t3() <= 0.0);
  require(same_sign && !(a.t1() == 0.0 && a.t3() == 0.0),
          "t1, t3 of equal sign and (t1, t3) != (0, 0)",
          fmt::format("t1 = {}, t3 = {}", a.t1(), a.t3()));
  require(p.admissible(a), "|t3| <= 2 pi x / C - |t1|",
          values(std::abs(a.t3()), 2.0 * std::numbers::pi * p.x / p.C - std::abs(a.t1())));

  const std::int64_t N = floor_cutoff(p.x);
  const std::int64_t Y = floor_cutoff(p.y);
  const Complex denom = a.s1 + a.s3 - 1.0;
  const Complex s3_over = a.s3 / denom;

  // (i) sum_{n <= x} n^{-s2} sum_{n < m <= y} m^{-s1} (m+n)^{-s3}
  const detail::PowerTable p1(a.s1, Y);
  const detail::PowerTable p2(a.s2, N);
  const detail::PowerTable p3(a.s3, Y + N);
  ComplexCompensatedSum main_sum;
  for (std::int64_t n = 1; n <= N; ++n) {
    if (Y <= n) break;
    const Complex inner = detail::complex_dot(p1.re.data() + n + 1, p1.im.data() + n + 1,
                                              p3.re.data() + 2 * n + 1,
                                              p3.im.data() + 2 * n + 1, Y - n);
    main_sum.add(p2[n] * inner);
  }

  // (ii) and (iii): the boundary sum at y and the tail integrals for n <= x.
  ComplexCompensatedSum boundary;
  ComplexCompensatedSum integrals;
  double integral_error = 0.0;
  const double log_y = std::log(p.y);
  for (std::int64_t n = 1; n <= N; ++n) {
    const double nd = static_cast<double>(n);
    boundary.add(p2[n] * cpow(p.y + nd, a.s3));
    const ApproxValue I = tail_integral(n, p.y, a.s1, a.s3, quad);
    const Complex weight = nd * p2[n];  // n^{1-s2}
    integrals.add(weight * I.value);
    integral_error += std::abs(weight) * I.error_bound;
  }
  const Complex y_factor = std::exp((1.0 - a.s1) * log_y) / denom;

  // (iv) + (v): one Dirichlet tail in s1 + s2 + s3 - 1.
  const ApproxValue J = tail_integral(1, 1.0, a.s1, a.s3, quad);
  const ApproxValue tail = dirichlet_tail(a.s1 + a.s2 + a.s3 - 1.0, p.x);
  const Complex tail_coef = (cpow(2.0, a.s3) + a.s3 * J.value) / denom;

  ComplexCompensatedSum total;
  total.add(main_sum.value());
  total.add(y_factor * boundary.value());
  total.add(s3_over * integrals.value());
  total.add(tail_coef * tail.value);

  double shape;
  const double x = p.x;
  if (a.sigma2() > 1.0 + kBoundaryTolerance) {
    shape = std::pow(x, -s1r - s3r);
  } else if (a.sigma2() >= 1.0 - kBoundaryTolerance) {
    shape = std::pow(x, -s1r - s3r) * std::log(std::max(x, std::numbers::e));
  } else {
    shape = std::pow(x, 1.0 - a.sigma_sum());
  }

  ApproxValue out;
  out.value = total.value();
  out.error_bound = constants.first_approx * shape + std::abs(s3_over) * integral_error +
                    std::abs(a.s3 / denom) * J.error_bound * std::abs(tail.value) +
                    std::abs(tail_coef) * tail.error_bound;
  out.rigor = Rigor::heuristic;
  out.cutoff = Y;
  out.terms = std::max<std::int64_t>(0, N * Y - N * (N + 1) / 2);
  require_finite(out.value, "av2_approx_first");
  return out;
}

void check_av2_second(const ZetaArgs& a) {
  a.validate();
  require_t3_at_least_2(a);
  require(a.sigma1() >= 0.0, "sigma1 >= 0", fmt::format("sigma1 = {}", a.sigma1()));
  require(a.t1() >= 0.0, "t1 >= 0", fmt::format("t1 = {}", a.t1()));
  const double s3 = a.sigma3();
  require(s3 > 0.0, "sigma3 > 0", fmt::format("sigma3 = {}", s3));
  require(s3 > 0.5 - a.sigma1(), "sigma3 > 1/2 - sigma1", values(s3, 0.5 - a.sigma1()));
  require(s3 > 1.5 - a.sigma1() - a.sigma2(), "sigma3 > 3/2 - sigma1 - sigma2",
          values(s3, 1.5 - a.sigma1() - a.sigma2()));
  require_off_hyperplane(a.s1 + a.s3, 1.0, "s1 + s3 != 1");
  require_off_hyperplane(a.s1 + a.s2 + a.s3, 2.0, "s1 + s2 + s3 != 2");
}

void check_mt2_approx(const ZetaArgs& a) {
  a.validate();
  require_t3_at_least_2(a);
  require(a.sigma1() >= 0.0, "sigma1 >= 0", fmt::format("sigma1 = {}", a.sigma1()));
  require(a.sigma2() >= 0.0, "sigma2 >= 0", fmt::format("sigma2 = {}", a.sigma2()));
  require(a.t1() >= 0.0, "t1 >= 0", fmt::format("t1 = {}", a.t1()));
  require(a.t2() >= 0.0, "t2 >= 0", fmt::format("t2 = {}", a.t2()));
  const double s3 = a.sigma3();
  require(s3 > 0.0, "sigma3 > 0", fmt::format("sigma3 = {}", s3));
  require(s3 > 0.5 - a.sigma1(), "sigma3 > 1/2 - sigma1", values(s3, 0.5 - a.sigma1()));
  require(s3 > 0.5 - a.sigma2(), "sigma3 > 1/2 - sigma2", values(s3, 0.5 - a.sigma2()));
  require(s3 > 1.5 - a.sigma1() - a.sigma2(), "sigma3 > 3/2 - sigma1 - sigma2",
          values(s3, 1.5 - a.sigma1() - a.sigma2()));
  require_off_hyperplane(a.s1 + a.s3, 1.0, "s1 + s3 != 1");
  require_off_hyperplane(a.s2 + a.s3, 1.0, "s2 + s3 != 1");
  require_off_hyperplane(a.s1 + a.s2 + a.s3, 2.0, "s1 + s2 + s3 != 2");
}

std::int64_t av2_second_cutoff(const ZetaArgs& a, double cutoff_scale) {
  const double scale = std::max(1.0, std::abs(a.t1()));
  return floor_cutoff(cutoff_scale * scale * a.t3());
}

std::int64_t mt2_approx_cutoff(const ZetaArgs& a, double cutoff_scale) {
  const double scale = std::max({1.0, std::abs(a.t1()), std::abs(a.t2())});
  return floor_cutoff(cutoff_scale * scale * a.t3());
}

double av2_second_error_shape(const ZetaArgs& a) {
  const double t = a.t3();
  const double s2 = a.sigma2();
  if (s2 > 1.5 + kBoundaryTolerance) return std::pow(t, 0.5 - a.sigma1() - a.sigma3());
  if (s2 >= 1.5 - kBoundaryTolerance) {
    return std::pow(t, 0.5 - a.sigma1() - a.sigma3()) * std::log(t);
  }
  return std::pow(t, 1.5 - a.sigma_sum());
}

double mt2_approx_error_shape(const ZetaArgs& a) {
  const double t = a.t3();
  const double hi = std::max(a.sigma1(), a.sigma2());
  const double lo_pair = std::min(a.sigma1(), a.sigma2()) + a.sigma3();
  if (hi > 1.5 + kBoundaryTolerance) return std::pow(t, -lo_pair);
  if (hi >= 1.5 - kBoundaryTolerance) return std::pow(t, -lo_pair) * std::log(t);
  return std::pow(t, 1.5 - a.sigma_sum());
}

ApproxValue av2_approx_second(const ZetaArgs& a, const Constants& constants,
                              double cutoff_scale) {
  check_av2_second(a);
  require(cutoff_scale >= 1.0, "cutoff_scale >= 1", fmt::format("{}", cutoff_scale));
  const std::int64_t M = av2_second_cutoff(a, cutoff_scale);
  ApproxValue out;
  out.value = av2_partial_sum(a, M);
  out.error_bound = constants.second_approx * av2_second_error_shape(a);
  out.rigor = Rigor::heuristic;
  out.cutoff = M;
  out.terms = M * (M - 1) / 2;
  return out;
}

ApproxValue mt2_approx(const ZetaArgs& a, const Constants& constants, double cutoff_scale) {
  check_mt2_approx(a);
  require(cutoff_scale >= 1.0, "cutoff_scale >= 1", fmt::format("{}", cutoff_scale));
  const std::int64_t M = mt2_approx_cutoff(a, cutoff_scale);
  ApproxValue out;
  out.value = mt2_partial_sum(a, M);
  out.error_bound = constants.mt_approx * mt2_approx_error_shape(a);
  out.rigor = Rigor::heuristic;
  out.cutoff = M;
  out.terms = M * M;
  return out;
}

ApproxValue riemann_zeta(Complex s) {
  const auto cutoff = static_cast<std::int64_t>(
      std::max(16.0, std::ceil(2.0 * (1.0 + std::abs(s.imag()))) + 8.0));
  return riemann_zeta_em(s, cutoff, 8);
}

std::string_view to_string(Route r) { return r == Route::direct ? "direct" : "approx"; }

Route route_from_string(std::string_view name) {
  if (name == "direct") return Route::direct;
  if (name == "approx") return Route::approx;
  throw PreconditionError("route in {direct, approx}", std::string(name));
}

RelationResidual functional_relation_residual(const ZetaArgs& a, double eps, Route route,
                                              const SeriesLimits& limits,
                                              const Constants& constants) {
  a.validate();
  ApproxValue mt;
  ApproxValue av;
  ApproxValue av_swapped;
  if (route == Route::direct) {
    mt = mt2_direct(a, eps, limits);
    const Truncation common{mt.cutoff, eps};
    av = av2_direct(a, common);
    av_swapped = av2_direct(a.swapped(), common);
    if (mt.rigor == Rigor::heuristic) av.rigor = Rigor::heuristic;
  } else {
    mt = mt2_approx(a, constants);
    av = av2_approx_second(a, constants);
    av_swapped = av2_approx_second(a.swapped(), constants);
  }
  const ApproxValue z = riemann_zeta(a.s1 + a.s2 + a.s3);
  const Complex two_pow = cpow(2.0, a.s3);

  ComplexCompensatedSum acc;
  acc.add(mt.value);
  acc.add(-(two_pow * z.value));
  acc.add(-av.value);
  acc.add(-av_swapped.value);

  RelationResidual out;
  out.residual = acc.value();
  out.budget = mt.error_bound + std::abs(two_pow) * z.error_bound + av.error_bound +
               av_swapped.error_bound;
  out.rigor = combine(combine(mt, av), av_swapped).rigor;
  out.cutoff = mt.cutoff;
  return out;
}

}  // namespace dzeta
