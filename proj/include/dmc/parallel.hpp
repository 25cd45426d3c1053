/* Copyright 2026 The dmc-workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// OpenMP sweep helpers. Every parallel kernel writes into index-addressed
// slots and results are merged in index order, so output never depends on
// the thread count.

#ifndef DMC_PARALLEL_HPP
#define DMC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dmc {

// Sets the sweep width for subsequent kernels (n <= 0 keeps the default).
void set_jobs(int n);
int jobs();

// Runs body(i) for i in [0, n). Exceptions thrown by the body are captured
// and the one with the smallest index is rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors;
  std::mutex mu;
  std::size_t first_error = n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (static_cast<std::size_t>(i) < first_error) {
        first_error = static_cast<std::size_t>(i);
        errors.assign(1, std::current_exception());
      }
    }
  }
  if (!errors.empty()) std::rethrow_exception(errors.front());
}

// Maps body over [0, n) into a vector, in index order.
template <typename T, typename Body>
std::vector<T> parallel_map(std::size_t n, Body&& body) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace dmc

#endif  // DMC_PARALLEL_HPP
