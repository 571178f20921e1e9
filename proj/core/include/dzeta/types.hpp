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

#include <complex>
#include <cstdint>
#include <string_view>

namespace dzeta {

// The universal scalar. Constructed values are always finite; operations
// validate their inputs and outputs with require_finite.
using Complex = std::complex<double>;

enum class Rigor { rigorous, heuristic };

std::string_view to_string(Rigor r);

// A computed value together with its error budget. `rigor` is `rigorous` only
// when every contribution to `error_bound` is a proven bound.
struct ApproxValue {
  Complex value;
  double error_bound = 0.0;
  Rigor rigor = Rigor::rigorous;
  // Diagnostics: largest outer index summed and number of series terms.
  std::int64_t cutoff = 0;
  std::int64_t terms = 0;
};

// Sum of two approximations; rigor degrades to heuristic if either is.
ApproxValue combine(const ApproxValue& a, const ApproxValue& b);

// Throws NumericalError naming `what` when z has a NaN or infinite part.
void require_finite(Complex z, std::string_view what);
void require_finite(double x, std::string_view what);

}  // namespace dzeta
