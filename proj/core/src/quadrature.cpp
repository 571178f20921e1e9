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

#include "dzeta/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "dzeta/errors.hpp"

namespace dzeta {

std::string_view to_string(QuadratureRule rule) {
  switch (rule) {
    case QuadratureRule::composite_simpson:
      return "composite-simpson";
    case QuadratureRule::gauss_legendre_panels:
      return "gauss-legendre-panels";
    case QuadratureRule::double_exponential_tail:
      return "double-exponential-tail";
  }
  return "unknown";
}

QuadratureRule quadrature_rule_from_string(std::string_view name) {
  for (auto r : {QuadratureRule::composite_simpson,
                 QuadratureRule::gauss_legendre_panels,
                 QuadratureRule::double_exponential_tail}) {
    if (to_string(r) == name) return r;
  }
  throw PreconditionError("quadrature rule is one of composite-simpson, "
                          "gauss-legendre-panels, double-exponential-tail",
                          std::string(name));
}

void QuadratureSpec::validate() const {
  if (panels < 1) {
    throw PreconditionError("panels >= 1", "panels = " + std::to_string(panels));
  }
  if (nodes_per_panel < 2 || nodes_per_panel > 128) {
    throw PreconditionError("2 <= nodes_per_panel <= 128",
                            "nodes_per_panel = " + std::to_string(nodes_per_panel));
  }
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw PreconditionError("abs_tol > 0", "abs_tol = " + std::to_string(abs_tol));
  }
  if (static_cast<double>(panels) * nodes_per_panel >
      static_cast<double>(max_evaluations)) {
    throw PreconditionError("panels * nodes_per_panel <= max_evaluations",
                            std::to_string(panels) + " * " +
                                std::to_string(nodes_per_panel));
  }
}

namespace {

GaussLegendreRule build_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 256) {
    throw PreconditionError("1 <= n <= 256", "Gauss-Legendre order " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_gauss_legendre(n));
  return *slot;
}

}  // namespace dzeta
