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

#include <stdexcept>
#include <string>

namespace dzeta {

// Input lies outside the set where an operation is defined or implemented
// (non-positive base, pole of Gamma or zeta, Re(s) <= 0 for zeta, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A documented precondition of an operation does not hold. `inequality()`
// names the violated condition in plain ASCII, e.g. "t3 >= 2".
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string inequality, const std::string& detail);

  const std::string& inequality() const noexcept { return inequality_; }

 private:
  std::string inequality_;
};

// Parameters outside the absolute-convergence region of a series.
class RegionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Evaluation point within the guard distance of a singular hyperplane.
class HyperplaneError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A mean-square path leaves the admissible set of its evaluator.
class PathError : public PreconditionError {
 public:
  PathError(std::string inequality, double first_t3, const std::string& detail);

  double first_failing_t3() const noexcept { return t3_; }

 private:
  double t3_;
};

class InsufficientDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an intermediate value is NaN/Inf or a work budget is exhausted.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dzeta
