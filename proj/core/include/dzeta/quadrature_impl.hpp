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

#include <cmath>
#include <numbers>

#include "dzeta/summation.hpp"

namespace dzeta {

template <class F>
Complex integrate_gauss_legendre(F&& f, double a, double b, int panels, int n) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  const double width = (b - a) / panels;
  ComplexCompensatedSum total;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + width * p;
    const double hi = (p + 1 == panels) ? b : a + width * (p + 1);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    Complex panel = 0.0;
    for (int i = 0; i < n; ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total.add(half * panel);
  }
  return total.value();
}

template <class F>
Complex integrate_simpson(F&& f, double a, double b, int panels, int n) {
  const int m = n + (n % 2);
  const double width = (b - a) / panels;
  ComplexCompensatedSum total;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + width * p;
    const double hi = (p + 1 == panels) ? b : a + width * (p + 1);
    const double h = (hi - lo) / m;
    Complex panel = f(lo) + f(hi);
    for (int i = 1; i < m; ++i) {
      panel += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + h * i);
    }
    total.add(panel * (h / 3.0));
  }
  return total.value();
}

template <class F>
Complex integrate_tanh_sinh(F&& f, double a, double b, double h,
                            double tau_max) {
  const double half = 0.5 * (b - a);
  const double pi_2 = 0.5 * std::numbers::pi;
  const int k_max = static_cast<int>(std::ceil(tau_max / h));
  ComplexCompensatedSum total;
  for (int k = -k_max; k <= k_max; ++k) {
    const double tau = h * k;
    const double u = pi_2 * std::sinh(tau);
    const double ch = std::cosh(u);
    const double x = std::tanh(u);
    const double w = pi_2 * std::cosh(tau) / (ch * ch);
    // Distance to the nearer endpoint without cancellation.
    const double gap = half / (std::exp(std::abs(u)) * ch);
    if (gap <= 0.0) continue;
    const double node = x >= 0.0 ? b - gap : a + gap;
    total.add(w * f(node));
  }
  return total.value() * (half * h);
}

}  // namespace dzeta
