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

#include <cstdint>
#include <functional>

#include "gconc/core.hpp"

namespace gconc::oracles {

// Upper estimate of the convex-roof G-concurrence: minimum ensemble average
// over sampled pure-state decompositions. Always a valid upper bound, so it
// sandwiches every lower bound computed elsewhere.
struct UpperBoundResult {
  double value = 0;
  int trials = 0;
  int best_decomposition_size = 0;
};

// Per trial: mix the eigen-ensemble columns by a Haar random m-column
// co-isometry (rank <= m <= 2 rank), then refine the mixing unitary by
// Riemannian descent - first on the smooth surrogate sum_k |det_k|^2, which
// finds zero-concurrence ensembles whenever the decomposition admits them,
// then on the actual ensemble average. Trial 0 is the bare eigen-ensemble.
// Deterministic for fixed (rho, trials, seed); the minimum over trials is
// nonincreasing in the trial count.
UpperBoundResult convex_roof_upper(const DensityMatrix& rho, int trials,
                                   std::uint64_t seed);

// Independent minimizer of d (prod_j lambda_j)^{2/d} over Schmidt vectors
// with sum lambda_j = sqrt(d F), sum lambda_j^2 = 1, lambda_j >= 0.
// Candidate seeds enumerate every stationary two-value split, followed by
// projected gradient descent from those and from random feasible points.
double constrained_cg_min(Dim d, double F, int trials, std::uint64_t seed);

// Root of a sign-changing function by bisection. Throws when f(lo) and f(hi)
// have the same sign.
double threshold_bisect(const std::function<double(double)>& f, double lo,
                        double hi, double tol);

}  // namespace gconc::oracles
