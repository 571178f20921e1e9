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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "dot_kernel.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/kernel.hpp"
#include "dzeta/parallel.hpp"
#include "dzeta/summation.hpp"

namespace dzeta {

using detail::complex_dot;
using detail::PowerTable;

namespace {

constexpr std::int64_t kBlock = 4096;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogRowTolerance = 1e-9;
constexpr double kRoundingUlps = 64.0;

inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void require_region(bool ok, const char* inequality, double lhs, double rhs) {
  if (!ok) {
    throw RegionError(inequality, fmt::format("lhs = {:.6g}, bound = {:.6g}", lhs, rhs));
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw PreconditionError("eps > 0", fmt::format("eps = {}", eps));
  }
}

// Integral-test bound on sum_{k>K} (1 + ln k)^j k^{-p} for p > 1, K >= 3.
double power_log_tail(double p, std::int64_t K, int j) {
  if (!(p > 1.0)) return kInf;
  const double r = p - 1.0;
  const double head = std::pow(static_cast<double>(K), -r);
  const double L = 1.0 + std::log(static_cast<double>(K));
  switch (j) {
    case 0: return head / r;
    case 1: return head * (L / r + 1.0 / (r * r));
    default: return head * (L * L / r + 2.0 * L / (r * r) + 2.0 / (r * r * r));
  }
}

// Bound on sum_{m>M} m^{-q} h(m)^power where h(m) = sum_{n<m} n^{-sigma}.
//   sigma > 1: h <= min(zeta(sigma), 1 + ln m)
//   sigma = 1: h <= 1 + ln m
//   sigma < 1: h <= m^{1-sigma} min(C, 1 + ln m), C = 1/(1-sigma) or 1 if sigma < 0
double weighted_inner_tail(double q, double sigma, std::int64_t M, int power) {
  double base_const;
  double exponent = q;
  bool has_const = true;
  if (sigma > 1.0 + kLogRowTolerance) {
    const ApproxValue z = riemann_zeta_em(Complex(sigma, 0.0), 10, 8);
    base_const = std::min(z.value.real() + z.error_bound, 1.0 + 1.0 / (sigma - 1.0));
  } else if (sigma >= 1.0 - kLogRowTolerance) {
    has_const = false;
    base_const = kInf;
  } else {
    base_const = sigma >= 0.0 ? 1.0 / (1.0 - sigma) : 1.0;
    exponent = q - power * (1.0 - sigma);
  }
  if (!(exponent > 1.0)) return kInf;

  // Explicit terms up to m = 3 so the logarithmic rows start where they are
  // monotone.
  double head = 0.0;
  std::int64_t start = M;
  if (start < 3) {
    for (std::int64_t m = M + 1; m <= 3; ++m) {
      const double md = static_cast<double>(m);
      const double growth = (sigma < 1.0 - kLogRowTolerance) ? std::pow(md, 1.0 - sigma) : 1.0;
      double h = 1.0 + std::log(md);
      if (has_const) h = std::min(h, base_const);
      head += std::pow(md, -q) * std::pow(growth * h, power);
    }
    start = 3;
  }
  double tail = power_log_tail(exponent, start, power);
  if (has_const) {
    tail = std::min(tail, std::pow(base_const, power) * power_log_tail(exponent, start, 0));
  }
  return head + tail;
}

std::pair<std::int64_t, bool> choose_cutoff(const std::function<double(std::int64_t)>& maj,
                                            double target, std::int64_t cap) {
  cap = std::max<std::int64_t>(cap, 2);
  if (!(target > 0.0) || maj(cap) > target) return {cap, true};
  if (maj(2) <= target) return {2, false};
  std::int64_t lo = 2;
  std::int64_t hi = cap;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (maj(mid) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, false};
}

std::int64_t isqrt_floor(double x) {
  return static_cast<std::int64_t>(std::floor(std::sqrt(std::max(0.0, x))));
}

// Runs fill(lo, hi) over [first, last] in blocks of kBlock.
void for_blocks(std::int64_t first, std::int64_t last,
                const std::function<void(std::int64_t, std::int64_t)>& fill) {
  if (last < first) return;
  const std::int64_t n = last - first + 1;
  const auto blocks = static_cast<std::size_t>((n + kBlock - 1) / kBlock);
  parallel_for(blocks, [&](std::size_t b) {
    const std::int64_t lo = first + static_cast<std::int64_t>(b) * kBlock;
    fill(lo, std::min(last, lo + kBlock - 1));
  });
}

Complex reduce_in_order(const std::vector<Complex>& contrib) {
  ComplexCompensatedSum acc;
  for (const Complex& c : contrib) acc.add(c);
  return acc.value();
}

enum class SqKind { av, mt };

// Partial sums of the square series at each checkpoint (ascending, the last
// one is the overall cutoff).
std::vector<double> sq_partial_sums(SqKind kind, Complex s1, Complex s2, double sigma,
                                    const std::vector<std::int64_t>& checkpoints) {
  const std::int64_t K = checkpoints.back();
  std::vector<double> out;
  if (K < 2) {
    out.assign(checkpoints.size(), 0.0);
    return out;
  }
  const PowerTable p2(s2, K);
  // rev[i] = (K - i)^{-s1}, so (k - n)^{-s1} = rev[K - k + n] runs forwards in n.
  std::vector<double> rev_re(static_cast<std::size_t>(K));
  std::vector<double> rev_im(static_cast<std::size_t>(K));
  for (std::int64_t i = 0; i < K; ++i) {
    const Complex z = cpow(static_cast<double>(K - i), s1);
    rev_re[i] = z.real();
    rev_im[i] = z.imag();
  }
  std::vector<double> contrib(static_cast<std::size_t>(K + 1), 0.0);
  for_blocks(2, K, [&](std::int64_t lo, std::int64_t hi) {
    std::uint64_t terms = 0;
    for (std::int64_t k = lo; k <= hi; ++k) {
      const std::int64_t n_max = kind == SqKind::av ? (k + 1) / 2 - 1 : k - 1;
      if (n_max <= 0) continue;
      const std::int64_t off = K - k + 1;
      const Complex c = complex_dot(rev_re.data() + off, rev_im.data() + off,
                                    p2.re.data() + 1, p2.im.data() + 1, n_max);
      contrib[k] = std::norm(c) * std::pow(static_cast<double>(k), -sigma);
      terms += static_cast<std::uint64_t>(n_max);
    }
    count_terms(terms);
  });
  CompensatedSum acc;
  std::size_t next = 0;
  for (std::int64_t k = 0; k <= K; ++k) {
    acc.add(contrib[k]);
    while (next < checkpoints.size() && checkpoints[next] == k) {
      out.push_back(acc.value());
      ++next;
    }
  }
  while (out.size() < checkpoints.size()) out.push_back(acc.value());
  return out;
}

std::int64_t sq_terms(SqKind kind, std::int64_t K) {
  return kind == SqKind::av ? K * K / 4 : K * (K - 1) / 2;
}

std::vector<double> tail_ladder(const std::vector<double>& base, int count) {
  std::vector<double> all;
  for (double b : base) {
    for (int j = 0; j < count + 2; ++j) {
      if (b + j > 1e-6) all.push_back(b + j);
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double e : all) {
    if (out.empty() || e - out.back() > 1e-6) out.push_back(e);
    if (static_cast<int>(out.size()) == count) break;
  }
  return out;
}

ApproxValue sq_evaluate(SqKind kind, Complex s1, Complex s2, double sigma, double eps,
                        const SeriesLimits& limits) {
  check_eps(eps);
  auto maj = [&](std::int64_t K) {
    return kind == SqKind::av ? av2_sq_tail_majorant(s1, s2, sigma, K)
                              : mt2_sq_tail_majorant(s1, s2, sigma, K);
  };
  const double per_term = kind == SqKind::av ? 4.0 : 2.0;
  const std::int64_t cap = std::min(
      limits.max_outer, isqrt_floor(per_term * static_cast<double>(limits.max_terms)));
  const double rounding_scale = kRoundingUlps * kEps * maj(1);
  auto [K, clamped] = choose_cutoff(maj, eps - rounding_scale, cap);

  ApproxValue out;
  out.rigor = Rigor::rigorous;
  const bool real_args = s1.imag() == 0.0 && s2.imag() == 0.0;
  const int levels = std::clamp(limits.extrapolation_levels, 0, 8);
  if (clamped && real_args && levels >= 2) {
    const std::int64_t step = std::int64_t{1} << (levels + 1);
    const std::int64_t K_top = std::max<std::int64_t>(step, (K / step) * step);
    std::vector<std::int64_t> checkpoints;
    for (int j = levels; j >= 0; --j) checkpoints.push_back(K_top >> j);
    const std::vector<double> sums = sq_partial_sums(kind, s1, s2, sigma, checkpoints);

    const double a = s1.real();
    const double b = s2.real();
    std::vector<double> base;
    if (kind == SqKind::av) {
      base = {2 * a + sigma - 1, 2 * a + b + sigma - 2, 2 * a + 2 * b + sigma - 3};
    } else {
      for (double e : {2 * b, 2 * a, a + b, a + 2 * b - 1, 2 * a + b - 1, 2 * a + 2 * b - 2}) {
        base.push_back(e + sigma - 1);
      }
    }
    // Largest K first so that the fits use the most accurate samples.
    std::vector<double> Ks;
    std::vector<double> Ss;
    for (int j = levels; j >= 0; --j) {
      Ks.push_back(static_cast<double>(checkpoints[j]));
      Ss.push_back(sums[j]);
    }
    const double fine = extrapolate_power_tail(Ks, Ss, tail_ladder(base, levels));
    const double coarse = extrapolate_power_tail(Ks, Ss, tail_ladder(base, levels - 1));
    out.value = fine;
    out.error_bound = std::abs(fine - coarse) + rounding_scale;
    out.rigor = Rigor::heuristic;
    out.cutoff = K_top;
    out.terms = sq_terms(kind, K_top);
    return out;
  }

  out.value = kind == SqKind::av ? av2_sq_partial_sum(s1, s2, sigma, K)
                                 : mt2_sq_partial_sum(s1, s2, sigma, K);
  out.error_bound = maj(K) + rounding_scale;
  out.rigor = clamped ? Rigor::heuristic : Rigor::rigorous;
  out.cutoff = K;
  out.terms = sq_terms(kind, K);
  return out;
}

ApproxValue sq_truncated(SqKind kind, Complex s1, Complex s2, double sigma,
                         const Truncation& trunc) {
  trunc.validate();
  const std::int64_t K = trunc.cutoff;
  ApproxValue out;
  if (kind == SqKind::av) {
    out.value = av2_sq_partial_sum(s1, s2, sigma, K);
    out.error_bound = av2_sq_tail_majorant(s1, s2, sigma, K);
    out.error_bound += kRoundingUlps * kEps * av2_sq_tail_majorant(s1, s2, sigma, 1);
  } else {
    out.value = mt2_sq_partial_sum(s1, s2, sigma, K);
    out.error_bound = mt2_sq_tail_majorant(s1, s2, sigma, K);
    out.error_bound += kRoundingUlps * kEps * mt2_sq_tail_majorant(s1, s2, sigma, 1);
  }
  out.rigor = Rigor::rigorous;
  out.cutoff = K;
  out.terms = sq_terms(kind, K);
  return out;
}

}  // namespace

void ZetaArgs::validate() const {
  require_finite(s1, "s1");
  require_finite(s2, "s2");
  require_finite(s3, "s3");
}

void Truncation::validate() const {
  if (cutoff < 2) {
    throw PreconditionError("cutoff >= 2", "cutoff = " + std::to_string(cutoff));
  }
  check_eps(requested_eps);
}

void check_av2_region(const ZetaArgs& a) {
  a.validate();
  const double p13 = a.sigma1() + a.sigma3();
  require_region(p13 > 1.0, "sigma1 + sigma3 > 1", p13, 1.0);
  require_region(a.sigma_sum() > 2.0, "sigma1 + sigma2 + sigma3 > 2", a.sigma_sum(), 2.0);
}

void check_mt2_region(const ZetaArgs& a) {
  a.validate();
  const double p13 = a.sigma1() + a.sigma3();
  const double p23 = a.sigma2() + a.sigma3();
  require_region(p13 > 1.0, "sigma1 + sigma3 > 1", p13, 1.0);
  require_region(p23 > 1.0, "sigma2 + sigma3 > 1", p23, 1.0);
  require_region(a.sigma_sum() > 2.0, "sigma1 + sigma2 + sigma3 > 2", a.sigma_sum(), 2.0);
}

void check_av2_sq_region(Complex s1, Complex s2, double sigma) {
  require_finite(s1, "s1");
  require_finite(s2, "s2");
  require_finite(sigma, "sigma");
  const double a = 2 * s1.real() + sigma;
  const double b = 2 * s1.real() + 2 * s2.real() + sigma;
  require_region(a > 1.0, "2 sigma1 + sigma > 1", a, 1.0);
  require_region(b > 3.0, "2 sigma1 + 2 sigma2 + sigma > 3", b, 3.0);
}

void check_mt2_sq_region(Complex s1, Complex s2, double sigma) {
  require_finite(s1, "s1");
  require_finite(s2, "s2");
  require_finite(sigma, "sigma");
  const double a = 2 * s1.real() + sigma;
  const double b = 2 * s2.real() + sigma;
  const double c = 2 * s1.real() + 2 * s2.real() + sigma;
  require_region(a > 1.0, "2 sigma1 + sigma > 1", a, 1.0);
  require_region(b > 1.0, "2 sigma2 + sigma > 1", b, 1.0);
  require_region(c > 3.0, "2 sigma1 + 2 sigma2 + sigma > 3", c, 3.0);
}

Complex av2_partial_sum(const ZetaArgs& a, std::int64_t M) {
  a.validate();
  if (M < 2) return 0.0;
  const PowerTable p1(a.s1, M);
  const PowerTable p2(a.s2, M - 1);
  const PowerTable p3(a.s3, 2 * M - 1);
  std::vector<Complex> contrib(static_cast<std::size_t>(M + 1));
  for_blocks(2, M, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t m = lo; m <= hi; ++m) {
      const Complex inner = complex_dot(p2.re.data() + 1, p2.im.data() + 1,
                                        p3.re.data() + m + 1, p3.im.data() + m + 1, m - 1);
      contrib[m] = mul(p1[m], inner);
    }
    count_terms(static_cast<std::uint64_t>((lo + hi - 2) * (hi - lo + 1) / 2));
  });
  const Complex value = reduce_in_order(contrib);
  require_finite(value, "av2 partial sum");
  return value;
}

Complex mt2_partial_sum(const ZetaArgs& a, std::int64_t M) {
  a.validate();
  if (M < 1) return 0.0;
  const PowerTable p1(a.s1, M);
  const PowerTable p3(a.s3, 2 * M);
  std::vector<Complex> contrib(static_cast<std::size_t>(M + 1));
  if (a.s1 == a.s2) {
    // Symmetric in m and n: twice the strict lower triangle plus the diagonal.
    for_blocks(1, M, [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t m = lo; m <= hi; ++m) {
        const Complex lower = complex_dot(p1.re.data() + 1, p1.im.data() + 1,
                                          p3.re.data() + m + 1, p3.im.data() + m + 1, m - 1);
        contrib[m] = mul(p1[m], 2.0 * lower + mul(p1[m], p3[2 * m]));
      }
      count_terms(static_cast<std::uint64_t>((lo + hi) * (hi - lo + 1) / 2));
    });
  } else {
    const PowerTable p2(a.s2, M);
    for_blocks(1, M, [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t m = lo; m <= hi; ++m) {
        const Complex row = complex_dot(p2.re.data() + 1, p2.im.data() + 1,
                                        p3.re.data() + m + 1, p3.im.data() + m + 1, M);
        contrib[m] = mul(p1[m], row);
      }
      count_terms(static_cast<std::uint64_t>(M * (hi - lo + 1)));
    });
  }
  const Complex value = reduce_in_order(contrib);
  require_finite(value, "mt2 partial sum");
  return value;
}

double av2_tail_majorant(const ZetaArgs& a, std::int64_t M) {
  const double c3 = std::max(1.0, std::pow(2.0, -a.sigma3()));
  return c3 * weighted_inner_tail(a.sigma1() + a.sigma3(), a.sigma2(), std::max<std::int64_t>(M, 1), 1);
}

double mt2_tail_majorant(const ZetaArgs& a, std::int64_t M) {
  M = std::max<std::int64_t>(M, 1);
  const double diagonal =
      std::pow(2.0, -a.sigma3()) * power_log_tail(a.sigma_sum(), M, 0);
  return av2_tail_majorant(a, M) + av2_tail_majorant(a.swapped(), M) + diagonal;
}

ApproxValue av2_direct(const ZetaArgs& a, double eps, const SeriesLimits& limits) {
  check_av2_region(a);
  check_eps(eps);
  const std::int64_t cap = std::min(
      limits.max_outer, isqrt_floor(2.0 * static_cast<double>(limits.max_terms)));
  const double rounding = kRoundingUlps * kEps * av2_tail_majorant(a, 1);
  auto [M, clamped] = choose_cutoff([&](std::int64_t m) { return av2_tail_majorant(a, m); },
                                    eps - rounding, cap);
  ApproxValue out;
  out.value = av2_partial_sum(a, M);
  out.error_bound = av2_tail_majorant(a, M) + rounding;
  out.rigor = clamped ? Rigor::heuristic : Rigor::rigorous;
  out.cutoff = M;
  out.terms = M * (M - 1) / 2;
  return out;
}

ApproxValue av2_direct(const ZetaArgs& a, const Truncation& trunc) {
  check_av2_region(a);
  trunc.validate();
  ApproxValue out;
  out.value = av2_partial_sum(a, trunc.cutoff);
  out.error_bound = av2_tail_majorant(a, trunc.cutoff) +
                    kRoundingUlps * kEps * av2_tail_majorant(a, 1);
  out.rigor = Rigor::rigorous;
  out.cutoff = trunc.cutoff;
  out.terms = trunc.cutoff * (trunc.cutoff - 1) / 2;
  return out;
}

ApproxValue mt2_direct(const ZetaArgs& a, double eps, const SeriesLimits& limits) {
  check_mt2_region(a);
  check_eps(eps);
  const double pairs_per_row = a.s1 == a.s2 ? 2.0 : 1.0;
  const std::int64_t cap = std::min(
      limits.max_outer,
      isqrt_floor(pairs_per_row * static_cast<double>(limits.max_terms)));
  const double rounding = kRoundingUlps * kEps * mt2_tail_majorant(a, 1);
  auto [M, clamped] = choose_cutoff([&](std::int64_t m) { return mt2_tail_majorant(a, m); },
                                    eps - rounding, cap);
  ApproxValue out;
  out.value = mt2_partial_sum(a, M);
  out.error_bound = mt2_tail_majorant(a, M) + rounding;
  out.rigor = clamped ? Rigor::heuristic : Rigor::rigorous;
  out.cutoff = M;
  out.terms = M * M;
  return out;
}

ApproxValue mt2_direct(const ZetaArgs& a, const Truncation& trunc) {
  check_mt2_region(a);
  trunc.validate();
  ApproxValue out;
  out.value = mt2_partial_sum(a, trunc.cutoff);
  out.error_bound = mt2_tail_majorant(a, trunc.cutoff) +
                    kRoundingUlps * kEps * mt2_tail_majorant(a, 1);
  out.rigor = Rigor::rigorous;
  out.cutoff = trunc.cutoff;
  out.terms = trunc.cutoff * trunc.cutoff;
  return out;
}

double av2_sq_partial_sum(Complex s1, Complex s2, double sigma, std::int64_t K) {
  require_finite(s1, "s1");
  require_finite(s2, "s2");
  const double v = sq_partial_sums(SqKind::av, s1, s2, sigma, {K}).back();
  require_finite(v, "av2 square partial sum");
  return v;
}

double mt2_sq_partial_sum(Complex s1, Complex s2, double sigma, std::int64_t K) {
  require_finite(s1, "s1");
  require_finite(s2, "s2");
  const double v = sq_partial_sums(SqKind::mt, s1, s2, sigma, {K}).back();
  require_finite(v, "mt2 square partial sum");
  return v;
}

double av2_sq_tail_majorant(Complex s1, Complex s2, double sigma, std::int64_t K) {
  // For k/2 < m < k: m^{-sigma1} <= c1 k^{-sigma1}.
  const double a = s1.real();
  const double c1 = a >= 0.0 ? std::pow(2.0, a) : 1.0;
  return c1 * c1 * weighted_inner_tail(2 * a + sigma, s2.real(), std::max<std::int64_t>(K, 1), 2);
}

double mt2_sq_tail_majorant(Complex s1, Complex s2, double sigma, std::int64_t K) {
  // Split the inner sum at m = k/2; each half is bounded as in the AV case
  // and |A + B|^2 <= 2A^2 + 2B^2.
  return 2.0 * av2_sq_tail_majorant(s1, s2, sigma, K) +
         2.0 * av2_sq_tail_majorant(s2, s1, sigma, K);
}

ApproxValue av2_sq(Complex s1, Complex s2, double sigma, double eps,
                   const SeriesLimits& limits) {
  check_av2_sq_region(s1, s2, sigma);
  return sq_evaluate(SqKind::av, s1, s2, sigma, eps, limits);
}

ApproxValue av2_sq(Complex s1, Complex s2, double sigma, const Truncation& trunc) {
  check_av2_sq_region(s1, s2, sigma);
  return sq_truncated(SqKind::av, s1, s2, sigma, trunc);
}

ApproxValue mt2_sq(Complex s1, Complex s2, double sigma, double eps,
                   const SeriesLimits& limits) {
  check_mt2_sq_region(s1, s2, sigma);
  return sq_evaluate(SqKind::mt, s1, s2, sigma, eps, limits);
}

ApproxValue mt2_sq(Complex s1, Complex s2, double sigma, const Truncation& trunc) {
  check_mt2_sq_region(s1, s2, sigma);
  return sq_truncated(SqKind::mt, s1, s2, sigma, trunc);
}

double extrapolate_power_tail(const std::vector<double>& K, const std::vector<double>& S,
                              const std::vector<double>& exponents) {
  const std::size_t n = exponents.size() + 1;
  if (K.size() < n || S.size() < n) {
    throw InsufficientDataError("extrapolate_power_tail: need exponents.size() + 1 samples");
  }
  // Rows: S_j = x_0 + sum_i x_i K_j^{-e_i}. Gaussian elimination with
  // partial pivoting on the small dense system.
  std::vector<std::vector<double>> A(n, std::vector<double>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    A[j][0] = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) A[j][i + 1] = std::pow(K[j], -exponents[i]);
    A[j][n] = S[j];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    }
    std::swap(A[col], A[piv]);
    if (A[col][col] == 0.0) throw NumericalError("extrapolate_power_tail: singular system");
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = A[r][col] / A[col][col];
      for (std::size_t c = col; c <= n; ++c) A[r][c] -= f * A[col][c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double v = A[r][n];
    for (std::size_t c = r + 1; c < n; ++c) v -= A[r][c] * x[c];
    x[r] = v / A[r][r];
  }
  return x[0];
}

}  // namespace dzeta
