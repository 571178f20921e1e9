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

#include "dzeta/errors.hpp"

#include <utility>

namespace dzeta {

PreconditionError::PreconditionError(std::string inequality,
                                     const std::string& detail)
    : std::invalid_argument("precondition violated: " + inequality +
                            (detail.empty() ? "" : " (" + detail + ")")),
      inequality_(std::move(inequality)) {}

PathError::PathError(std::string inequality, double first_t3,
                     const std::string& detail)
    : PreconditionError(std::move(inequality), detail), t3_(first_t3) {}

}  // namespace dzeta
