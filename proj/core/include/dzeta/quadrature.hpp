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
#include <span>
#include <string_view>
#include <vector>

#include "dzeta/types.hpp"

namespace dzeta {

enum class QuadratureRule {
  composite_simpson,
  gauss_legendre_panels,
  double_exponential_tail,
};

std::string_view to_string(QuadratureRule rule);
QuadratureRule quadrature_rule_from_string(std::string_view name);

struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::gauss_legendre_panels;
  // Minimum panel count; rules raise it where the integrand needs more.
  int panels = 16;
  int nodes_per_panel = 16;
  double abs_tol = 1e-12;
  // Hard cap on panels * nodes_per_panel for one integral.
  std::int64_t max_evaluations = 10'000'000;

  // Throws PreconditionError when a field is out of range.
  void validate() const;
};

// Gauss-Legendre nodes and weights on [-1, 1]. Cached; safe to call
// concurrently.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

// Integrates f over [a, b] split into `panels` equal panels with an n-point
// Gauss-Legendre rule on each. Panel sums are accumulated with compensation.
template <class F>
Complex integrate_gauss_legendre(F&& f, double a, double b, int panels, int n);

// Composite Simpson with `panels` panels of `n` (rounded up to even)
// subintervals each.
template <class F>
Complex integrate_simpson(F&& f, double a, double b, int panels, int n);

// Tanh-sinh rule on [a, b] with step h and abscissae |tau| <= tau_max.
template <class F>
Complex integrate_tanh_sinh(F&& f, double a, double b, double h,
                            double tau_max = 3.5);

}  // namespace dzeta

#include "dzeta/quadrature_impl.hpp"
