// Copyright 2026 The gconc authors
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

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <type_traits>
#include <vector>

namespace gconc::par {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// path that produces bit-identical results to the OpenMP path (partial
// results are stored per chunk/job and reduced in a fixed order, so the
// thread count never affects the output).
enum class Exec { serial, openmp };

// Thread cap: GCONC_THREADS if set (>= 1), otherwise all hardware threads.
int thread_cap();

// True when compiled with OpenMP support.
bool openmp_available();

namespace detail {
void run_indexed_impl(std::size_t n, void* ctx, void (*call)(void*, std::size_t),
                      Exec exec);
}

// Runs job(0..n-1), each writing only to its own slot. Jobs must be
// independent; scheduling order is unspecified.
template <class F>
void run_indexed(std::size_t n, F&& job, Exec exec) {
  using Fn = std::remove_reference_t<F>;
  auto call = [](void* ctx, std::size_t i) { (*static_cast<Fn*>(ctx))(i); };
  detail::run_indexed_impl(n, &job, call, exec);
}

// Sum of term(perm) over all permutations of {0..d-1} except the identity.
// Chunked by the leading element: chunk v holds the (d-1)! permutations with
// perm[0] == v, accumulated serially in lexicographic order; chunk partials
// are then added in chunk order. The grouping is independent of the thread
// count, so serial and openmp execution agree bitwise.
template <class F>
double permutation_sum(int d, F&& term, Exec exec) {
  std::vector<double> partial(static_cast<std::size_t>(d), 0.0);
  auto chunk = [&](std::size_t v) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    perm[0] = static_cast<int>(v);
    int pos = 1;
    for (int x = 0; x < d; ++x) {
      if (x != static_cast<int>(v)) perm[static_cast<std::size_t>(pos++)] = x;
    }
    // Tail starts sorted ascending; in chunk 0 the first arrangement is the
    // identity permutation, which is excluded.
    bool skip_first = (v == 0);
    double acc = 0.0;
    do {
      if (skip_first) {
        skip_first = false;
        continue;
      }
      acc += term(perm.data());
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    partial[v] = acc;
  };
  run_indexed(static_cast<std::size_t>(d), chunk, exec);
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

// Serial reference for permutation_sum: one flat lexicographic scan with a
// single accumulator. Kept for tests and the benchmark.
template <class F>
double permutation_sum_reference(int d, F&& term) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  double acc = 0.0;
  bool skip_first = true;  // identity comes first in lexicographic order
  do {
    if (skip_first) {
      skip_first = false;
      continue;
    }
    acc += term(perm.data());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace gconc::par
