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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dzeta/constants.hpp"
#include "dzeta/quadrature.hpp"
#include "dzeta/series.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

enum class Target { av, mt };
enum class Theorem { T1_1, T1_2_a, T1_2_b, T1_3_a, T1_3_b, T1_3_c, T1_4_a, T1_4_b, none };
enum class Evaluator { direct, second_approx };

std::string_view to_string(Target t);
std::string_view to_string(Theorem t);
std::string_view to_string(Evaluator e);
Target target_from_string(std::string_view s);
Theorem theorem_from_string(std::string_view s);
Evaluator evaluator_from_string(std::string_view s);

// One hypothesis of a theorem, evaluated at a point. margin = lhs - rhs,
// oriented so that the hypothesis holds when `holds` is true.
struct InequalityCheck {
  std::string theorem;
  std::string inequality;
  double margin = 0.0;
  bool holds = false;

  bool operator==(const InequalityCheck&) const = default;
};

// Predicted residual I(T) - zeta^[2] T = O(T^error_exponent (log T)^beta).
// For the (T log T)^{1/2} cases error_exponent is 1/2, log_power is 1 and
// log_inside_root is set, so beta = 1/2.
struct RegimeClassification {
  Theorem theorem = Theorem::none;
  double error_exponent = 0.0;
  int log_power = 0;
  bool log_inside_root = false;
  Target target = Target::av;
  std::vector<Theorem> alternates;
  std::vector<InequalityCheck> checks;

  double log_exponent() const { return log_inside_root ? 0.5 * log_power : log_power; }
  bool operator==(const RegimeClassification&) const = default;
};

// Equality tolerance at the case boundaries (sigma sums equal to 3/4 or 2).
inline constexpr double kRegimeTolerance = 1e-12;

RegimeClassification classify_regime(Target target, Complex s1, Complex s2, double sigma3);

struct MeanSquarePlan {
  Target target = Target::av;
  Complex s1;
  Complex s2;
  double sigma3 = 0.0;
  std::vector<double> T_samples;
  Evaluator evaluator = Evaluator::direct;
  QuadratureSpec quad;
  double eps = 1e-10;
  // Multiplies the node density (2 halves every panel).
  double refinement = 1.0;
  SeriesLimits limits;

  // Throws PreconditionError / PathError when the plan is not admissible.
  void validate(const Constants& constants = builtin_constants()) const;
};

struct RunManifest {
  std::string library_version;
  std::string constants_version;
  std::string constants_sha256;
  // Every input in canonical text form, in a fixed order.
  std::vector<std::pair<std::string, std::string>> inputs;

  bool operator==(const RunManifest&) const = default;
};

struct ExponentFit {
  double exponent = 0.0;
  double stderr_ = 0.0;
  int used = 0;
  int dropped = 0;
};

struct MeanSquareReport {
  std::vector<std::pair<double, double>> I_values;
  double zeta_sq_ref = 0.0;
  double zeta_sq_error = 0.0;
  std::vector<double> coefficient_estimates;
  std::vector<double> residuals;
  // Empty when there are too few usable samples for a fit.
  std::optional<double> fitted_exponent;
  std::optional<double> fitted_exponent_stderr;
  int fit_dropped = 0;
  RegimeClassification regime;
  RunManifest run_manifest;

  bool operator==(const MeanSquareReport&) const = default;
};

// Nodes and panels used for one mean-square integration.
struct MeanSquareGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  // panel_end[p] is one past the last node of panel p; panels tile [2, T_max].
  std::vector<std::size_t> panel_end;
  std::vector<double> panel_upper;
  double spacing = 0.0;
};

// Panels between consecutive breakpoints (T samples plus `jumps`, where the
// integrand is discontinuous) with node spacing <= min(0.25, pi/(4(1+ln L)))
// / refinement; L is the largest index n whose n^{-it} occurs.
MeanSquareGrid mean_square_grid(const std::vector<double>& T_samples,
                                const std::vector<double>& jumps, double largest_index,
                                const QuadratureSpec& quad, double refinement);

// I(T_j) = int_2^{T_j} |f(t)|^2 dt over a grid. Nodes are evaluated in
// parallel and reduced in node order.
std::vector<double> integrate_mean_square(const std::function<Complex(double)>& f,
                                          const MeanSquareGrid& grid,
                                          const std::vector<double>& T_samples);

MeanSquareReport mean_square(const MeanSquarePlan& plan,
                             const Constants& constants = builtin_constants());

// Least squares of log|R| - beta log log T on log T.
ExponentFit fit_power_law(const std::vector<double>& T, const std::vector<double>& R,
                          double beta = 0.0);

// Fit over the upper half of the samples, dropping |R| < 1e-3 zeta_sq_ref;
// beta from the report's regime. Needs >= 4 samples.
ExponentFit residual_exponent_fit(const MeanSquareReport& report);

struct DirichletPoly {
  std::vector<std::pair<std::int64_t, Complex>> coefficients;

  void validate() const;
};

struct MvCheck {
  double lhs = 0.0;
  double main = 0.0;
  double budget = 0.0;
};

// lhs = int_2^T |sum a_n n^{it}|^2 dt, main = T sum |a_n|^2,
// budget = sum n |a_n|^2. The diagonal part of lhs is integrated exactly;
// the oscillating off-diagonal part by Gauss-Legendre panels.
MvCheck mv_check(const DirichletPoly& poly, double T, const QuadratureSpec& quad = {});

}  // namespace dzeta
