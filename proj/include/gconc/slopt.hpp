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
#include <vector>

#include "gconc/core.hpp"
#include "gconc/report.hpp"

namespace gconc::slopt {

// Result of the alternating local-filtering normal form. Each filter has unit
// determinant, so the G-concurrence of the running unnormalized state is
// conserved exactly; the trace can only shrink (arithmetic-geometric mean),
// and at convergence equals the G-concurrence carried by the normalized tau.
struct NormalFormResult {
  UnnormalizedState tau;
  double trace_factor = 1.0;  // Tr tau
  bool converged = false;
  int iterations = 0;
  bool vanished = false;      // trace or a marginal eigenvalue collapsed
  std::vector<double> trace_history;
};

// Unit-determinant filter det(m)^{1/(2d)} m^{-1/2} for a positive marginal m.
Matrix marginal_filter(const Matrix& marginal, int d);

// Alternating filtering until both marginals are proportional to identity
// within tol (relative Frobenius deviation), the state vanishes (running
// trace < 1e-12 or a relative marginal eigenvalue < 1e-12), or max_iter.
NormalFormResult normal_form(const DensityMatrix& rho, double tol = 1e-10,
                             int max_iter = 500);

// Best overlap with the product-unitary orbit of |Phi_d>. Any U_A (x) U_B
// maps |Phi_d> to |Phi_W> = (1/sqrt d) sum_jk W_jk |jk> with W = U_A U_B^T
// unitary, and conversely every unitary W arises this way; so maximizing
//   F(W) = <Phi_W| rho |Phi_W> = (1/d) vec(W)^dag rho vec(W)
// over unitary W covers the whole orbit with half the parameters.
// Power-polar iteration: m <- unvec(rho vec(W)), W <- polar unitary of m.
// For PSD rho each step is nondecreasing in F.
struct FefResult {
  double f_max = 0;
  Matrix correlation_unitary;  // the optimal W
  int restarts_used = 0;
};

FefResult maximize_fef(const DensityMatrix& rho, int restarts,
                       std::uint64_t seed);

// Rotates rho so that fidelity_phi(result) equals F(W) for the given W.
DensityMatrix rotate_to_phi(const DensityMatrix& rho, const Matrix& w);

struct BoundConfig {
  bool use_nf = false;
  bool use_lu = false;
  bool use_phases = false;
  int restarts = 20;
  std::uint64_t seed = 0;
  // The witness permutation sum costs Theta(d! d); above this local dimension
  // only the projection route is evaluated.
  int witness_max_d = 8;
};

// Full pipeline: optional normal form (bound bookkeeping via the trace
// factor), optional local-unitary rotation, then both the witness and the
// projection bound on the resulting state. final_bound is the best certified
// lower bound, clamped at zero; a vanished normal form certifies zero
// exactly.
BoundReport best_bound(const DensityMatrix& rho, const BoundConfig& config);

}  // namespace gconc::slopt
