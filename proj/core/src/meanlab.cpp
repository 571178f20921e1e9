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

#include "dzeta/meanlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "dzeta/continuation.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/kernel.hpp"
#include "dzeta/parallel.hpp"
#include "dzeta/summation.hpp"

namespace dzeta {
namespace {

constexpr double kTol = kRegimeTolerance;

class Hypotheses {
 public:
  Hypotheses(std::vector<InequalityCheck>& sink, std::string theorem)
      : sink_(sink), theorem_(std::move(theorem)) {}

  // lhs > rhs, with equality up to kTol counting as a failure.
  Hypotheses& greater(const char* text, double lhs, double rhs) {
    return record(text, lhs - rhs, lhs - rhs > kTol);
  }
  // lhs >= rhs, with equality up to kTol counting as a success.
  Hypotheses& at_least(const char* text, double lhs, double rhs) {
    return record(text, lhs - rhs, lhs - rhs >= -kTol);
  }
  bool all() const { return ok_; }

 private:
  Hypotheses& record(const char* text, double margin, bool holds) {
    sink_.push_back({theorem_, text, margin, holds});
    ok_ = ok_ && holds;
    return *this;
  }

  std::vector<InequalityCheck>& sink_;
  std::string theorem_;
  bool ok_ = true;
};

struct Candidate {
  Theorem theorem;
  double exponent;
  int log_power;
  bool inside_root;
};

double growth_rank(const Candidate& c) {
  return c.exponent + (c.log_power > 0 ? 1e-6 : 0.0);
}

std::string fmt_real(double x) { return fmt::format("{:.17g}", x); }

std::string fmt_complex(Complex z) {
  return fmt::format("{:.17g},{:.17g}", z.real(), z.imag());
}

// First t3 in [2, t_max] at which |sigma_part + i (tau + t3)| < standoff.
std::optional<double> first_close_approach(double sigma_part, double tau, double t_max,
                                           double standoff) {
  const double r2 = standoff * standoff - sigma_part * sigma_part;
  if (r2 <= 0.0) return std::nullopt;
  const double r = std::sqrt(r2);
  const double lo = -tau - r;
  const double hi = -tau + r;
  if (hi <= 2.0 || lo > t_max) return std::nullopt;
  return std::max(2.0, lo);
}

void check_path_hyperplanes(const MeanSquarePlan& p, double t_max, double standoff) {
  struct Plane {
    const char* name;
    double sigma_part;
    double tau;
  };
  const double s1 = p.s1.real(), s2 = p.s2.real();
  const double t1 = p.s1.imag(), t2 = p.s2.imag();
  std::vector<Plane> planes = {
      {"s1 + s3 != 1", s1 + p.sigma3 - 1.0, t1},
      {"s1 + s2 + s3 != 2", s1 + s2 + p.sigma3 - 2.0, t1 + t2},
  };
  if (p.target == Target::mt) planes.push_back({"s2 + s3 != 1", s2 + p.sigma3 - 1.0, t2});
  double first = std::numeric_limits<double>::infinity();
  const char* name = nullptr;
  for (const Plane& plane : planes) {
    const auto t = first_close_approach(plane.sigma_part, plane.tau, t_max, standoff);
    if (t && *t < first) {
      first = *t;
      name = plane.name;
    }
  }
  if (name != nullptr) {
    throw PathError(name, first,
                    fmt::format("path comes within {:.3g} of the hyperplane at t3 = {:.17g}",
                                standoff, first));
  }
}

ZetaArgs point(const MeanSquarePlan& p, double t3) {
  return {p.s1, p.s2, Complex(p.sigma3, t3)};
}

std::vector<std::pair<std::string, std::string>> manifest_inputs(const MeanSquarePlan& p) {
  std::string samples;
  for (std::size_t i = 0; i < p.T_samples.size(); ++i) {
    if (i > 0) samples += ';';
    samples += fmt_real(p.T_samples[i]);
  }
  return {
      {"target", std::string(to_string(p.target))},
      {"s1", fmt_complex(p.s1)},
      {"s2", fmt_complex(p.s2)},
      {"sigma3", fmt_real(p.sigma3)},
      {"T_samples", samples},
      {"evaluator", std::string(to_string(p.evaluator))},
      {"quad.rule", std::string(to_string(p.quad.rule))},
      {"quad.panels", std::to_string(p.quad.panels)},
      {"quad.nodes_per_panel", std::to_string(p.quad.nodes_per_panel)},
      {"quad.abs_tol", fmt_real(p.quad.abs_tol)},
      {"eps", fmt_real(p.eps)},
      {"refinement", fmt_real(p.refinement)},
      {"limits.max_outer", std::to_string(p.limits.max_outer)},
      {"limits.max_terms", std::to_string(p.limits.max_terms)},
      {"limits.extrapolation_levels", std::to_string(p.limits.extrapolation_levels)},
  };
}

template <class E>
E parse_enum(std::string_view s, std::initializer_list<E> all, const char* what) {
  for (E e : all) {
    if (to_string(e) == s) return e;
  }
  throw PreconditionError(what, fmt::format("unknown value '{}'", s));
}

}  // namespace

std::string_view to_string(Target t) { return t == Target::av ? "AV" : "MT"; }

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T1_1: return "T1_1";
    case Theorem::T1_2_a: return "T1_2_a";
    case Theorem::T1_2_b: return "T1_2_b";
    case Theorem::T1_3_a: return "T1_3_a";
    case Theorem::T1_3_b: return "T1_3_b";
    case Theorem::T1_3_c: return "T1_3_c";
    case Theorem::T1_4_a: return "T1_4_a";
    case Theorem::T1_4_b: return "T1_4_b";
    case Theorem::none: return "none";
  }
  return "none";
}

std::string_view to_string(Evaluator e) {
  return e == Evaluator::direct ? "direct" : "second_approx";
}

Target target_from_string(std::string_view s) {
  if (s == "av" || s == "AV") return Target::av;
  if (s == "mt" || s == "MT") return Target::mt;
  throw PreconditionError("target in {AV, MT}", fmt::format("unknown value '{}'", s));
}

Theorem theorem_from_string(std::string_view s) {
  return parse_enum(s,
                    {Theorem::T1_1, Theorem::T1_2_a, Theorem::T1_2_b, Theorem::T1_3_a,
                     Theorem::T1_3_b, Theorem::T1_3_c, Theorem::T1_4_a, Theorem::T1_4_b,
                     Theorem::none},
                    "theorem id");
}

Evaluator evaluator_from_string(std::string_view s) {
  return parse_enum(s, {Evaluator::direct, Evaluator::second_approx},
                    "evaluator in {direct, second_approx}");
}

RegimeClassification classify_regime(Target target, Complex s1, Complex s2, double sigma3) {
  const double x1 = s1.real(), x2 = s2.real(), x3 = sigma3;
  const double t1 = s1.imag(), t2 = s2.imag();
  const double pair1 = x1 + x3;
  const double total = x1 + x2 + x3;

  RegimeClassification out;
  out.target = target;
  std::vector<Candidate> found;

  if (target == Target::av) {
    Hypotheses h11(out.checks, "T1_1");
    h11.greater("sigma1 + sigma3 > 1", pair1, 1.0).greater("sigma1 + sigma2 + sigma3 > 2", total, 2.0);
    if (h11.all()) found.push_back({Theorem::T1_1, 0.0, 0, false});

    Hypotheses h12(out.checks, "T1_2");
    h12.at_least("sigma1 >= 0", x1, 0.0)
        .at_least("t1 >= 0", t1, 0.0)
        .greater("sigma3 > 0", x3, 0.0)
        .greater("sigma1 + sigma3 > 1/2", pair1, 0.5)
        .at_least("sigma1 + sigma3 <= 1", 1.0, pair1)
        .greater("sigma1 + sigma2 + sigma3 > 2", total, 2.0);
    if (h12.all()) {
      Hypotheses split(out.checks, "T1_2_a");
      split.at_least("sigma1 + sigma3 <= 3/4", 0.75, pair1);
      if (split.all()) {
        found.push_back({Theorem::T1_2_a, 2.0 - 2.0 * pair1, 1, false});
      } else {
        found.push_back({Theorem::T1_2_b, 0.5, 0, false});
      }
    }

    Hypotheses h13(out.checks, "T1_3");
    h13.at_least("sigma1 >= 0", x1, 0.0)
        .at_least("t1 >= 0", t1, 0.0)
        .greater("sigma3 > 0", x3, 0.0)
        .greater("sigma1 + sigma3 > 1/2", pair1, 0.5)
        .at_least("sigma1 + sigma2 + sigma3 <= 2", 2.0, total)
        .greater("sigma1 + sigma2 + sigma3 > 3/2", total, 1.5);
    if (h13.all()) {
      Hypotheses split(out.checks, "T1_3_a");
      split.at_least("sigma2 >= 1/2 + sigma1 + sigma3", x2, 0.5 + pair1);
      if (split.all()) {
        found.push_back({Theorem::T1_3_a, 2.0 - 2.0 * pair1, 1, false});
      } else if (std::abs(total - 2.0) <= kTol) {
        found.push_back({Theorem::T1_3_c, 0.5, 1, true});
      } else {
        found.push_back({Theorem::T1_3_b, 2.5 - total, 0, false});
      }
    }
  } else {
    Hypotheses h14(out.checks, "T1_4");
    h14.at_least("sigma1 >= 0", x1, 0.0)
        .at_least("sigma2 >= 0", x2, 0.0)
        .greater("sigma3 > 0", x3, 0.0)
        .at_least("t1 >= 0", t1, 0.0)
        .at_least("t2 >= 0", t2, 0.0)
        .at_least("sigma1 + sigma3 <= 1", 1.0, pair1)
        .at_least("sigma2 + sigma3 <= 1", 1.0, x2 + x3)
        .greater("sigma1 + sigma2 + sigma3 > 3/2", total, 1.5);
    if (h14.all()) {
      if (std::abs(total - 2.0) <= kTol) {
        found.push_back({Theorem::T1_4_b, 0.5, 1, true});
      } else {
        found.push_back({Theorem::T1_4_a, 2.5 - total, 0, false});
      }
    }
  }

  if (found.empty()) return out;
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return growth_rank(a) < growth_rank(b);
  });
  out.theorem = found.front().theorem;
  out.error_exponent = found.front().exponent;
  out.log_power = found.front().log_power;
  out.log_inside_root = found.front().inside_root;
  for (std::size_t i = 1; i < found.size(); ++i) out.alternates.push_back(found[i].theorem);
  return out;
}

void MeanSquarePlan::validate(const Constants& constants) const {
  require_finite(s1, "s1");
  require_finite(s2, "s2");
  require_finite(sigma3, "sigma3");
  quad.validate();
  if (quad.rule == QuadratureRule::double_exponential_tail) {
    throw PreconditionError("quad.rule in {gauss-legendre, simpson}",
                            "the mean square integrates over finite panels");
  }
  if (!(eps > 0.0)) throw PreconditionError("eps > 0", fmt::format("eps = {}", eps));
  if (!(refinement >= 1.0) || !std::isfinite(refinement)) {
    throw PreconditionError("refinement >= 1", fmt::format("refinement = {}", refinement));
  }
  if (T_samples.empty()) throw PreconditionError("T_samples non-empty", "no samples given");
  if (!(T_samples.front() >= 2.0)) {
    throw PreconditionError("T_samples[0] >= 2", fmt::format("T = {}", T_samples.front()));
  }
  for (std::size_t i = 0; i < T_samples.size(); ++i) {
    require_finite(T_samples[i], "T sample");
    if (i > 0 && !(T_samples[i] > T_samples[i - 1])) {
      throw PreconditionError("T_samples strictly increasing",
                              fmt::format("T[{}] = {} after {}", i, T_samples[i],
                                          T_samples[i - 1]));
    }
  }

  const double t_max = T_samples.back();
  const ZetaArgs start = point(*this, 2.0);
  try {
    if (evaluator == Evaluator::direct) {
      if (target == Target::av) {
        check_av2_region(start);
      } else {
        check_mt2_region(start);
      }
    } else {
      check_path_hyperplanes(*this, t_max, constants.standoff);
      // The remaining hypotheses do not depend on t3, so the start decides.
      if (target == Target::av) {
        check_av2_second(start);
      } else {
        check_mt2_approx(start);
      }
    }
  } catch (const PathError&) {
    throw;
  } catch (const PreconditionError& e) {
    const std::string what = e.what();
    const auto open = what.find(" (");
    const std::string detail = open == std::string::npos ? "" : "; " + what.substr(open + 2, what.size() - open - 3);
    throw PathError(e.inequality(), 2.0, "first fails at t3 = 2" + detail);
  }
}

MeanSquareGrid mean_square_grid(const std::vector<double>& T_samples,
                                const std::vector<double>& jumps, double largest_index,
                                const QuadratureSpec& quad, double refinement) {
  MeanSquareGrid grid;
  const double L = std::max(1.0, largest_index);
  grid.spacing =
      std::min(0.25, std::numbers::pi / (4.0 * (1.0 + std::log(L)))) / refinement;
  if (T_samples.empty() || T_samples.back() <= 2.0) return grid;

  std::vector<double> cuts = {2.0};
  for (double t : T_samples) {
    if (t > 2.0) cuts.push_back(t);
  }
  for (double t : jumps) {
    if (t > 2.0 && t < T_samples.back()) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const bool gauss = quad.rule == QuadratureRule::gauss_legendre_panels;
  const int n = gauss ? quad.nodes_per_panel : quad.nodes_per_panel + (quad.nodes_per_panel % 2);
  // Largest gap between neighbouring nodes, per unit panel length.
  const double gap = gauss ? std::numbers::pi / (2.0 * n) : 1.0 / n;
  const double max_panel = grid.spacing / gap;
  const GaussLegendreRule* gl = gauss ? &gauss_legendre(n) : nullptr;

  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double a = cuts[c];
    const double b = cuts[c + 1];
    const auto panels =
        static_cast<std::int64_t>(std::max(1.0, std::ceil((b - a) / max_panel)));
    const double width = (b - a) / static_cast<double>(panels);
    for (std::int64_t p = 0; p < panels; ++p) {
      const double lo = a + width * static_cast<double>(p);
      const double hi = p + 1 == panels ? b : lo + width;
      const double half = 0.5 * (hi - lo);
      const double mid = 0.5 * (hi + lo);
      if (gauss) {
        for (int k = 0; k < n; ++k) {
          grid.nodes.push_back(mid + half * gl->nodes[k]);
          grid.weights.push_back(half * gl->weights[k]);
        }
      } else {
        const double h = (hi - lo) / n;
        for (int k = 0; k <= n; ++k) {
          const double w = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
          grid.nodes.push_back(k == n ? hi : lo + h * k);
          grid.weights.push_back(w * h / 3.0);
        }
      }
      grid.panel_end.push_back(grid.nodes.size());
      grid.panel_upper.push_back(hi);
    }
  }
  return grid;
}

std::vector<double> integrate_mean_square(const std::function<Complex(double)>& f,
                                          const MeanSquareGrid& grid,
                                          const std::vector<double>& T_samples) {
  std::vector<double> values(grid.nodes.size());
  constexpr std::size_t kChunk = 8;
  const std::size_t chunks = (values.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(values.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) values[i] = std::norm(f(grid.nodes[i]));
  });

  std::vector<double> out(T_samples.size(), 0.0);
  CompensatedSum total;
  std::size_t node = 0;
  std::size_t sample = 0;
  while (sample < out.size() && T_samples[sample] <= 2.0) ++sample;
  for (std::size_t p = 0; p < grid.panel_end.size(); ++p) {
    CompensatedSum panel;
    for (; node < grid.panel_end[p]; ++node) panel.add(grid.weights[node] * values[node]);
    total.add(panel);
    const double upper = grid.panel_upper[p];
    while (sample < out.size() && T_samples[sample] <= upper) {
      out[sample] = total.value();
      ++sample;
    }
  }
  for (; sample < out.size(); ++sample) out[sample] = total.value();
  return out;
}

MeanSquareReport mean_square(const MeanSquarePlan& plan, const Constants& constants) {
  plan.validate(constants);
  const double t_max = plan.T_samples.back();
  const bool av = plan.target == Target::av;

  std::function<Complex(double)> f;
  std::vector<double> jumps;
  double largest_index = 2.0;
  if (plan.evaluator == Evaluator::direct) {
    const ZetaArgs start = point(plan, 2.0);
    const ApproxValue probe =
        av ? av2_direct(start, plan.eps, plan.limits) : mt2_direct(start, plan.eps, plan.limits);
    const std::int64_t M = probe.cutoff;
    largest_index = 2.0 * static_cast<double>(M);
    f = [&plan, M, av](double t) {
      const ZetaArgs z = point(plan, t);
      return av ? av2_partial_sum(z, M) : mt2_partial_sum(z, M);
    };
  } else {
    const ZetaArgs end = point(plan, t_max);
    const double scale = av ? std::max(1.0, std::abs(plan.s1.imag()))
                            : std::max({1.0, std::abs(plan.s1.imag()), std::abs(plan.s2.imag())});
    const std::int64_t M_max = av ? av2_second_cutoff(end) : mt2_approx_cutoff(end);
    largest_index = 2.0 * static_cast<double>(std::max<std::int64_t>(1, M_max));
    for (std::int64_t j = 1; static_cast<double>(j) / scale < t_max; ++j) {
      const double t = static_cast<double>(j) / scale;
      if (t > 2.0) jumps.push_back(t);
    }
    f = [&plan, &constants, av](double t) {
      const ZetaArgs z = point(plan, t);
      return av ? av2_approx_second(z, constants).value : mt2_approx(z, constants).value;
    };
  }

  const MeanSquareGrid grid =
      mean_square_grid(plan.T_samples, jumps, largest_index, plan.quad, plan.refinement);
  const std::vector<double> I = integrate_mean_square(f, grid, plan.T_samples);

  MeanSquareReport report;
  report.regime = classify_regime(plan.target, plan.s1, plan.s2, plan.sigma3);
  const ApproxValue ref = av ? av2_sq(plan.s1, plan.s2, 2.0 * plan.sigma3, plan.eps, plan.limits)
                             : mt2_sq(plan.s1, plan.s2, 2.0 * plan.sigma3, plan.eps, plan.limits);
  report.zeta_sq_ref = ref.value.real();
  report.zeta_sq_error = ref.error_bound;
  for (std::size_t i = 0; i < I.size(); ++i) {
    const double T = plan.T_samples[i];
    report.I_values.emplace_back(T, I[i]);
    report.coefficient_estimates.push_back(I[i] / T);
    report.residuals.push_back(I[i] - report.zeta_sq_ref * T);
  }
  if (plan.T_samples.size() >= 4) {
    try {
      const ExponentFit fit = residual_exponent_fit(report);
      report.fitted_exponent = fit.exponent;
      report.fitted_exponent_stderr = fit.stderr_;
      report.fit_dropped = fit.dropped;
    } catch (const InsufficientDataError&) {
      report.fit_dropped = static_cast<int>((plan.T_samples.size() + 1) / 2);
    }
  }
  report.run_manifest.library_version = std::string(library_version());
  report.run_manifest.constants_version = constants.version;
  report.run_manifest.constants_sha256 = constants.sha256;
  report.run_manifest.inputs = manifest_inputs(plan);
  return report;
}

ExponentFit fit_power_law(const std::vector<double>& T, const std::vector<double>& R,
                          double beta) {
  if (T.size() != R.size()) {
    throw PreconditionError("T and R of equal length",
                            fmt::format("{} vs {}", T.size(), R.size()));
  }
  std::vector<double> x, y;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (!(T[i] > 1.0) || R[i] == 0.0 || !std::isfinite(R[i])) {
      throw PreconditionError("T > 1 and R(T) nonzero",
                              fmt::format("T = {}, R = {}", T[i], R[i]));
    }
    const double lt = std::log(T[i]);
    x.push_back(lt);
    y.push_back(std::log(std::abs(R[i])) - beta * std::log(lt));
  }
  if (x.size() < 2) throw InsufficientDataError("a slope needs at least two samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw InsufficientDataError("all samples share one T");
  ExponentFit fit;
  fit.exponent = sxy / sxx;
  fit.used = static_cast<int>(x.size());
  if (x.size() > 2) {
    double sse = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - my - fit.exponent * (x[i] - mx);
      sse += r * r;
    }
    fit.stderr_ = std::sqrt(sse / (n - 2.0) / sxx);
  }
  return fit;
}

ExponentFit residual_exponent_fit(const MeanSquareReport& report) {
  const std::size_t n = report.I_values.size();
  if (n < 4 || report.residuals.size() != n) {
    throw InsufficientDataError(fmt::format("need at least 4 T samples, have {}", n));
  }
  std::vector<double> T, R;
  int dropped = 0;
  const double floor = 1e-3 * std::abs(report.zeta_sq_ref);
  for (std::size_t i = n / 2; i < n; ++i) {
    if (std::abs(report.residuals[i]) < floor || report.residuals[i] == 0.0) {
      ++dropped;
      continue;
    }
    T.push_back(report.I_values[i].first);
    R.push_back(report.residuals[i]);
  }
  if (T.size() < 2) {
    throw InsufficientDataError(
        fmt::format("{} of the upper-half residuals are below 1e-3 zeta_sq_ref", dropped));
  }
  ExponentFit fit = fit_power_law(T, R, report.regime.log_exponent());
  fit.dropped = dropped;
  return fit;
}

void DirichletPoly::validate() const {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto& [n, a] = coefficients[i];
    if (n < 1) throw PreconditionError("n >= 1", fmt::format("n = {}", n));
    if (i > 0 && n <= coefficients[i - 1].first) {
      throw PreconditionError("n strictly increasing",
                              fmt::format("{} after {}", n, coefficients[i - 1].first));
    }
    require_finite(a, "a_n");
  }
}

MvCheck mv_check(const DirichletPoly& poly, double T, const QuadratureSpec& quad) {
  poly.validate();
  quad.validate();
  if (poly.coefficients.empty()) return {};
  if (!(T > 2.0) || !std::isfinite(T)) throw PreconditionError("T > 2", fmt::format("T = {}", T));

  double diag = 0.0, budget = 0.0;
  for (const auto& [n, a] : poly.coefficients) {
    diag += std::norm(a);
    budget += static_cast<double>(n) * std::norm(a);
  }
  MvCheck out;
  out.main = T * diag;
  out.budget = budget;

  const std::size_t N = poly.coefficients.size();
  std::vector<double> logs(N);
  for (std::size_t i = 0; i < N; ++i) {
    logs[i] = std::log(static_cast<double>(poly.coefficients[i].first));
  }
  // The largest frequency is ln(n_max / n_min).
  const double ratio = static_cast<double>(poly.coefficients.back().first) /
                       static_cast<double>(poly.coefficients.front().first);
  QuadratureSpec gl = quad;
  gl.rule = QuadratureRule::gauss_legendre_panels;
  const MeanSquareGrid grid = mean_square_grid({T}, {}, ratio, gl, 2.0);

  auto off_diagonal = [&](double t) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      s += poly.coefficients[i].second * std::polar(1.0, t * logs[i]);
    }
    return std::norm(s) - diag;
  };
  CompensatedSum acc;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    acc.add(grid.weights[i] * off_diagonal(grid.nodes[i]));
  }
  out.lhs = (T - 2.0) * diag + acc.value();
  return out;
}

}  // namespace dzeta
