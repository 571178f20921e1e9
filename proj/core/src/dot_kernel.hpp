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
#include <vector>

namespace dzeta::detail {

// sum_i x_i y_i over complex vectors stored as separate re/im arrays, with
// compensated accumulation in eight lanes. Lane order is fixed, so the
// result depends only on the inputs.
std::complex<double> complex_dot(const double* xr, const double* xi,
                                 const double* yr, const double* yi,
                                 std::int64_t n);

// n^{-s} for n = 0..N in structure-of-arrays form; entry 0 is zero.
struct PowerTable {
  std::vector<double> re;
  std::vector<double> im;

  PowerTable() = default;
  PowerTable(std::complex<double> s, std::int64_t N);
  std::complex<double> operator[](std::int64_t n) const { return {re[n], im[n]}; }
};

}  // namespace dzeta::detail
