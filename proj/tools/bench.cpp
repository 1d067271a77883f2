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

// Timings of the OpenMP kernels against their serial references. The serial
// reference is the plain single-accumulator implementation kept for testing;
// the kernels use fixed chunking so their output is identical for any thread
// count.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>

#include "gconc/core.hpp"
#include "gconc/oracles.hpp"
#include "gconc/parallel.hpp"
#include "gconc/random.hpp"
#include "gconc/slopt.hpp"
#include "gconc/witness.hpp"

namespace {

using namespace gconc;
using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int repeats) {
  auto t0 = clock_type::now();
  for (int i = 0; i < repeats; ++i) fn();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

void report(const std::string& name, double serial_ms, double omp_ms,
            bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(12) << serial_ms
            << std::setw(12) << omp_ms << std::setw(10)
            << (omp_ms > 0 ? serial_ms / omp_ms : 0.0) << std::setw(10)
            << (equal ? "yes" : "NO") << "\n";
}

void bench_permutation_sum(int d) {
  auto gen = rng::engine(17);
  Eigen::MatrixXd pop(d, d);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) pop(i, j) = uni(gen);
  }
  auto term = [&](const int* sigma) {
    double prod = 1.0;
    for (int i = 0; i < d; ++i) prod *= pop(i, sigma[i]);
    return std::pow(prod, 1.0 / d);
  };
  double ref_value = 0, omp_value = 0;
  double serial_ms = time_ms(
      [&] { ref_value = par::permutation_sum_reference(d, term); }, 3);
  double omp_ms = time_ms(
      [&] { omp_value = par::permutation_sum(d, term, par::Exec::openmp); }, 3);
  bool equal = std::abs(ref_value - omp_value) <=
               1e-12 * std::max(1.0, std::abs(ref_value));
  report("permutation_sum d=" + std::to_string(d), serial_ms, omp_ms, equal);
}

DensityMatrix random_mixed(int d, std::uint64_t seed) {
  auto gen = rng::engine(seed);
  Matrix x = rng::gaussian_matrix(d * d, d * d, gen);
  Matrix w = x * x.adjoint();
  w /= w.trace().real();
  return DensityMatrix::trusted(Dim(d), std::move(w));
}

void bench_fef(int d, int restarts) {
  DensityMatrix rho = random_mixed(d, 23);
  slopt::FefResult serial_res{}, omp_res{};
  // The restart loop runs through run_indexed; forcing one thread gives the
  // serial path.
  double omp_ms =
      time_ms([&] { omp_res = slopt::maximize_fef(rho, restarts, 5); }, 3);
  setenv("GCONC_THREADS", "1", 1);
  double serial_ms =
      time_ms([&] { serial_res = slopt::maximize_fef(rho, restarts, 5); }, 3);
  unsetenv("GCONC_THREADS");
  report("maximize_fef d=" + std::to_string(d) + " restarts=" +
             std::to_string(restarts),
         serial_ms, omp_ms, serial_res.f_max == omp_res.f_max);
}

void bench_roof(int d, int trials) {
  DensityMatrix rho = random_mixed(d, 29);
  oracles::UpperBoundResult serial_res{}, omp_res{};
  double omp_ms = time_ms(
      [&] { omp_res = oracles::convex_roof_upper(rho, trials, 7); }, 1);
  setenv("GCONC_THREADS", "1", 1);
  double serial_ms = time_ms(
      [&] { serial_res = oracles::convex_roof_upper(rho, trials, 7); }, 1);
  unsetenv("GCONC_THREADS");
  report("convex_roof_upper d=" + std::to_string(d) + " trials=" +
             std::to_string(trials),
         serial_ms, omp_ms, serial_res.value == omp_res.value);
}

void bench_phase_opt(int d, int restarts) {
  DensityMatrix rho = random_mixed(d, 31);
  witness::WitnessResult serial_res{}, omp_res{};
  double omp_ms = time_ms(
      [&] { omp_res = witness::phase_optimized_bg(rho, restarts, 11); }, 3);
  setenv("GCONC_THREADS", "1", 1);
  double serial_ms = time_ms(
      [&] { serial_res = witness::phase_optimized_bg(rho, restarts, 11); }, 3);
  unsetenv("GCONC_THREADS");
  report("phase_optimized_bg d=" + std::to_string(d) + " restarts=" +
             std::to_string(restarts),
         serial_ms, omp_ms, serial_res.raw == omp_res.raw);
}

}  // namespace

int main() {
  std::cout << "threads available: " << par::thread_cap()
            << (par::openmp_available() ? " (OpenMP)" : " (no OpenMP)")
            << "\n\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right
            << std::setw(12) << "serial ms" << std::setw(12) << "omp ms"
            << std::setw(10) << "speedup" << std::setw(10) << "equal"
            << "\n";
  bench_permutation_sum(8);
  bench_permutation_sum(9);
  bench_fef(4, 64);
  bench_fef(6, 32);
  bench_phase_opt(6, 64);
  bench_roof(3, 8);
  return 0;
}
