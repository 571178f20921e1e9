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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `acceptance N` runs criterion N alone.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "calibration/calibration.hpp"
#include "cli/cli.hpp"
#include "dzeta/constants.hpp"
#include "dzeta/continuation.hpp"
#include "dzeta/kernel.hpp"
#include "dzeta/meanlab.hpp"
#include "dzeta/parallel.hpp"
#include "dzeta/series.hpp"
#include "support/frozen_values.hpp"
#include "support/naive_oracle.hpp"

namespace dzeta {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double cpu_seconds() { return static_cast<double>(std::clock()) / CLOCKS_PER_SEC; }

struct Outcome {
  bool pass;
  std::string detail;
};

MeanSquarePlan ladder_plan() {
  MeanSquarePlan p;
  p.T_samples = {50.0, 100.0, 200.0, 400.0};
  return p;
}

Outcome oracle_equivalence() {
  std::string detail;
  bool pass = true;
  for (const double s : {2.0, 1.5}) {
    const ZetaArgs a{s, s, s};
    const double eps = 1e-9;
    for (const bool mt : {false, true}) {
      const auto t0 = Clock::now();
      const ApproxValue v = mt ? mt2_direct(a, eps) : av2_direct(a, eps);
      const double secs = seconds_since(t0);
      const Complex brute = mt ? oracle::mt2(a.s1, a.s2, a.s3, v.cutoff)
                               : oracle::av2(a.s1, a.s2, a.s3, v.cutoff);
      // Distance to the exact value: rounding against the brute sum plus the
      // rigorous tail bound.
      const double gap = std::abs(v.value - brute) + v.error_bound;
      bool ok = gap <= 1e-9 && secs < 5.0 && v.rigor == Rigor::rigorous;
      if (s == 2.0) {
        const double exact = mt ? frozen::kMT_2_2_2 : frozen::kAV_2_2_2;
        ok = ok && std::abs(v.value - exact) <= 1e-9;
      }
      pass = pass && ok;
      detail += fmt::format("{}({}) M={} |v-brute|+bound={:.2e} {:.2f}s; ", mt ? "MT" : "AV", s,
                            v.cutoff, gap, secs);
    }
  }
  return {pass, detail};
}

Outcome functional_relation() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> sig(1.1, 3.0), tp(0.0, 10.0);
  SeriesLimits limits;
  limits.max_terms = 200'000'000;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const ZetaArgs a{{sig(rng), tp(rng)}, {sig(rng), tp(rng)}, {sig(rng), tp(rng)}};
    const RelationResidual r = functional_relation_residual(a, 1e-10, Route::direct, limits);
    worst = std::max(worst, std::abs(r.residual));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8 && secs < 30.0,
          fmt::format("max |residual| = {:.2e} over 10 points, {:.1f}s", worst, secs)};
}

Outcome overlap_consistency() {
  const double K = builtin_constants().second_approx;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const ZetaArgs& a : calibration::overlap_grid(calibration::kHeldOutSeed, 10, false)) {
    worst = std::max(worst, calibration::second_approx_ratio(a).ratio);
  }
  const double secs = seconds_since(t0);
  return {worst <= K && secs < 120.0,
          fmt::format("held-out max |approx-direct|/t3^(3/2-sigma) = {:.3f} <= K = {:.3f}, {:.1f}s",
                      worst, K, secs)};
}

Outcome desk_scale_t11() {
  MeanSquarePlan p = ladder_plan();
  p.s1 = 2.0;
  p.s2 = 2.0;
  p.sigma3 = 2.0;
  p.eps = 1e-8;
  const auto t0 = Clock::now();
  const MeanSquareReport r = mean_square(p);
  const double secs = seconds_since(t0);
  const double ratio = r.coefficient_estimates.back() / r.zeta_sq_ref;
  double max_early = 0.0, max_all = 0.0;
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    max_all = std::max(max_all, std::abs(r.residuals[i]));
    if (r.I_values[i].first <= 100.0) max_early = std::max(max_early, std::abs(r.residuals[i]));
  }
  const bool ok = std::abs(ratio - 1.0) <= 0.05 && max_all <= 2.0 * max_early && secs < 600.0;
  return {ok, fmt::format("I(400)/400 / zeta_sq = {:.5f}, max|R| to 400 / to 100 = {:.3f}, {:.1f}s",
                          ratio, max_all / max_early, secs)};
}

struct SweepStats {
  double cpu = 0.0;
  std::uint64_t terms = 0;
};

Outcome fitted_bound(MeanSquarePlan p, double predicted, const char* label, SweepStats* stats) {
  const auto t0 = Clock::now();
  const double c0 = cpu_seconds();
  const std::uint64_t n0 = terms_evaluated();
  const MeanSquareReport r = mean_square(p);
  const double secs = seconds_since(t0);
  if (stats != nullptr) {
    stats->cpu = cpu_seconds() - c0;
    stats->terms = terms_evaluated() - n0;
  }
  if (!r.fitted_exponent) return {false, "no fit (too few usable residuals)"};
  const double limit = predicted + 0.2;
  return {*r.fitted_exponent <= limit && secs < 1800.0,
          fmt::format("{} fitted exponent {:.4f} <= {:.2f} (regime {}), {:.1f}s", label,
                      *r.fitted_exponent, limit, to_string(r.regime.theorem), secs)};
}

Outcome desk_scale_t12(SweepStats* stats) {
  MeanSquarePlan p = ladder_plan();
  p.s1 = 0.5;
  p.s2 = 1.6;
  p.sigma3 = 0.4;
  p.evaluator = Evaluator::second_approx;
  p.eps = 1e-8;
  return fitted_bound(p, 0.5, "AV", stats);
}

Outcome desk_scale_t14() {
  MeanSquarePlan p = ladder_plan();
  p.target = Target::mt;
  p.s1 = 0.55;
  p.s2 = 0.55;
  p.sigma3 = 0.45;
  p.evaluator = Evaluator::second_approx;
  p.eps = 1e-6;
  return fitted_bound(p, 0.95, "MT", nullptr);
}

Outcome mean_value() {
  const double kappa = builtin_constants().mv_kappa;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& m : calibration::mv_instances(calibration::kHeldOutSeed, 50)) {
    worst = std::max(worst, calibration::mv_ratio(m));
  }
  DirichletPoly single;
  single.coefficients = {{1, 1.0}};
  const MvCheck c = mv_check(single, 100.0);
  const bool exact = c.lhs == 98.0 && std::abs(c.lhs - c.main) <= kappa * c.budget;
  const double secs = seconds_since(t0);
  return {worst <= kappa && exact && secs < 60.0,
          fmt::format("max |lhs-main|/budget = {:.3f} <= kappa = {:.3f}; single term lhs = {}, {:.1f}s",
                      worst, kappa, c.lhs, secs)};
}

Outcome mellin_barnes() {
  QuadratureSpec q;
  q.abs_tol = 1e-10;
  const auto t0 = Clock::now();
  double worst = 0.0;
  int points = 0;
  for (const Complex s : {Complex(0.8, 0.0), Complex(1.5, 2.0), Complex(3.0, -4.0)}) {
    for (const double lambda : {0.1, 1.0, 7.5}) {
      for (const double frac : {0.25, 0.75}) {
        const Complex v = mellin_barnes_binomial(s, lambda, -frac * s.real(), q);
        worst = std::max(worst, std::abs(v - cpow(1.0 + lambda, s)));
        ++points;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8 && points == 18 && secs < 30.0,
          fmt::format("{} points, max error {:.2e}, {:.2f}s", points, worst, secs)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path cfg = dir / "dzeta_acceptance_c4.json";
  {
    std::ofstream f(cfg);
    f << R"({"target": "AV", "s1": 2, "s2": 2, "sigma3": 2, "T": [50, 100, 200, 400],)"
         R"( "evaluator": "direct", "eps": 1e-8})";
  }
  const unsigned saved = thread_count();
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "2", "4"}) {
    const fs::path out = dir / fmt::format("dzeta_acceptance_c4_{}.csv", threads);
    std::ostringstream o, e;
    const int code = cli::run_cli(
        {"--config", cfg.string(), "--threads", threads, "--out", out.string(), "mean-square"}, o, e);
    if (code != 0) return {false, "mean-square failed: " + e.str()};
    std::ifstream in(out, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    outputs.push_back(buf.str());
    fs::remove(out);
    fs::remove(fs::path(out.string() + ".json"));
  }
  set_thread_count(saved);
  fs::remove(cfg);
  const bool same = std::all_of(outputs.begin(), outputs.end(),
                                [&](const std::string& s) { return s == outputs.front(); });
  return {same && !outputs.front().empty(),
          fmt::format("CSV with --threads 1, 2, 4: {}", same ? "byte-identical" : "differs")};
}

Outcome performance(const SweepStats& sweep) {
  const unsigned saved = thread_count();
  set_thread_count(1);
  const ZetaArgs a{0.5, 1.6, {0.4, 400.0}};
  std::vector<double> ms;
  ApproxValue v;
  for (int i = 0; i < 7; ++i) {
    const auto t0 = Clock::now();
    v = av2_approx_second(a);
    ms.push_back(1e3 * seconds_since(t0));
  }
  set_thread_count(saved);
  std::sort(ms.begin(), ms.end());
  const double median = ms[ms.size() / 2];
  const double rate = static_cast<double>(sweep.terms) / sweep.cpu;
  return {median < 5.0 && rate >= 1e7,
          fmt::format("t3=400 evaluation ({} terms) median {:.2f} ms; criterion-5 sweep {:.3g} "
                      "terms/s/core ({:.3g} terms, {:.2f} cpu-s)",
                      v.terms, median, rate, static_cast<double>(sweep.terms), sweep.cpu)};
}

}  // namespace
}  // namespace dzeta

int main(int argc, char** argv) {
  using namespace dzeta;
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  SweepStats sweep;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"functional relation", functional_relation},
      {"overlap consistency", overlap_consistency},
      {"mean square, O(1) regime", desk_scale_t11},
      {"mean square, AV continuation regime", [&] { return desk_scale_t12(&sweep); }},
      {"mean square, MT restricted domain", desk_scale_t14},
      {"mean value of Dirichlet polynomials", mean_value},
      {"Mellin-Barnes kernel identity", mellin_barnes},
      {"determinism across thread counts", determinism},
      {"performance",
       [&] {
         if (sweep.terms == 0) desk_scale_t12(&sweep);
         return performance(sweep);
       }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
