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

#include <cstddef>
#include <cstdint>
#include <functional>

namespace dzeta {

// Worker threads used by parallel_for. Defaults to hardware concurrency.
// Results never depend on this value: work is split into fixed tasks whose
// partial results are reduced in task order by the caller.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs task(i) for i in [0, n_tasks). Nested calls run serially on the
// calling thread. The first exception thrown by any task is rethrown.
void parallel_for(std::size_t n_tasks,
                  const std::function<void(std::size_t)>& task);

// Running total of series terms evaluated by the summation kernels; used to
// report throughput.
std::uint64_t terms_evaluated();
void count_terms(std::uint64_t n);

}  // namespace dzeta
