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

#include "dot_kernel.hpp"

#include <cstring>

#include "dzeta/kernel.hpp"
#include "dzeta/summation.hpp"

namespace dzeta::detail {
namespace {

typedef double Lane4 __attribute__((vector_size(32)));

inline Lane4 load4(const double* p) {
  Lane4 v;
  std::memcpy(&v, p, sizeof v);
  return v;
}

inline void two_sum_lanes(Lane4& sum, Lane4& comp, Lane4 x) {
  const Lane4 s = sum + x;
  const Lane4 bp = s - sum;
  comp += (sum - (s - bp)) + (x - bp);
  sum = s;
}

struct LaneAcc {
  Lane4 re{0, 0, 0, 0};
  Lane4 re_c{0, 0, 0, 0};
  Lane4 im{0, 0, 0, 0};
  Lane4 im_c{0, 0, 0, 0};

  void add(Lane4 ar, Lane4 ai, Lane4 br, Lane4 bi) {
    two_sum_lanes(re, re_c, ar * br - ai * bi);
    two_sum_lanes(im, im_c, ar * bi + ai * br);
  }
};

}  // namespace

__attribute__((target_clones("avx2", "default")))
std::complex<double> complex_dot(const double* xr, const double* xi,
                                 const double* yr, const double* yi,
                                 std::int64_t n) {
  LaneAcc a;
  LaneAcc b;
  std::int64_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a.add(load4(xr + i), load4(xi + i), load4(yr + i), load4(yi + i));
    b.add(load4(xr + i + 4), load4(xi + i + 4), load4(yr + i + 4), load4(yi + i + 4));
  }
  ComplexCompensatedSum acc;
  for (int l = 0; l < 4; ++l) {
    acc.add(a.re[l], a.im[l]);
    acc.add(b.re[l], b.im[l]);
  }
  for (int l = 0; l < 4; ++l) {
    acc.add(a.re_c[l], a.im_c[l]);
    acc.add(b.re_c[l], b.im_c[l]);
  }
  for (; i < n; ++i) {
    acc.add(xr[i] * yr[i] - xi[i] * yi[i], xr[i] * yi[i] + xi[i] * yr[i]);
  }
  return acc.value();
}

PowerTable::PowerTable(std::complex<double> s, std::int64_t N)
    : re(static_cast<std::size_t>(N + 1)), im(static_cast<std::size_t>(N + 1)) {
  for (std::int64_t n = 1; n <= N; ++n) {
    const std::complex<double> z = cpow(static_cast<double>(n), s);
    re[n] = z.real();
    im[n] = z.imag();
  }
}

}  // namespace dzeta::detail
