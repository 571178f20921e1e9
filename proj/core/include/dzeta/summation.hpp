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

namespace dzeta {

// Error-free transformation: a + b == s + err exactly (Knuth's TwoSum).
// Requires strict IEEE evaluation; the library is built without -ffast-math.
struct TwoSumResult {
  double sum;
  double err;
};

inline TwoSumResult two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bp = s - a;
  const double ap = s - bp;
  return {s, (a - ap) + (b - bp)};
}

// Compensated accumulator. Accumulated rounding errors are kept in a second
// word and folded in on read, so the result is as accurate as if summed in
// twice the working precision and then rounded.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const TwoSumResult r = two_sum(sum_, x);
    sum_ = r.sum;
    comp_ += r.err;
  }
  void add(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void add(double re, double im) noexcept {
    re_.add(re);
    im_.add(im);
  }
  void add(const ComplexCompensatedSum& other) noexcept {
    re_.add(other.re_);
    im_.add(other.im_);
  }
  std::complex<double> value() const noexcept {
    return {re_.value(), im_.value()};
  }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace dzeta
