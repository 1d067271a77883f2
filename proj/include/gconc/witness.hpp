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
#include <optional>

#include "gconc/core.hpp"

namespace gconc::witness {

// Number of density-matrix entries the witness reads: the d^2 populations
// <jk|rho|jk> and the d(d-1)/2 coherences <ii|rho|jj> with i < j. Everything
// else in rho is ignored, which is the point of the bound.
struct EntryAudit {
  std::size_t populations = 0;
  std::size_t coherences = 0;
  std::size_t total() const { return populations + coherences; }
};

EntryAudit expected_entry_audit(int d);

// The O(d^2) slice of a density matrix that the witness depends on. Extracted
// once; the evaluation below touches nothing but this struct.
struct WitnessInputs {
  int d = 0;
  Eigen::MatrixXd populations;   // populations(j,k) = <jk|rho|jk>
  Matrix diag_coherences;        // M(i,j) = <ii|rho|jj>, Hermitian
  EntryAudit audit;

  static WitnessInputs extract(const DensityMatrix& rho);
};

struct WitnessResult {
  double raw = 0;                // positive_term - diagonal_term - permutation_term
  double clamped = 0;            // max(0, raw)
  double positive_term = 0;      // sum_{i != j} Re <ii|rho|jj>
  double diagonal_term = 0;      // (d-2) sum_i <ii|rho|ii>
  double permutation_term = 0;   // d sum_{sigma != id} (prod_i <i sig(i)|rho|i sig(i)>)^{1/d}
  std::optional<RVector> phases_applied;  // length 2d when phase-optimized
};

// Certified lower bound on the G-concurrence of rho; raw may be negative.
WitnessResult bg_witness(const DensityMatrix& rho);
WitnessResult bg_witness(const WitnessInputs& in);

// Sharpens the positive term over local phase rotations
// diag(e^{i theta_j}) (x) diag(e^{i phi_k}). The diagonal and permutation
// terms are phase-invariant, so only the coherence phases are optimized:
// start from the leading eigenvector of the coherence matrix, then cyclic
// coordinate ascent; multistart with seeded random phases. Never returns a
// result below the unrotated witness.
WitnessResult phase_optimized_bg(const DensityMatrix& rho, int restarts,
                                 std::uint64_t seed);

// Recomputes the witness from phase-rotated inputs; used to sanity-check the
// phases reported by phase_optimized_bg.
WitnessResult bg_with_phases(const WitnessInputs& in, const RVector& phases);

// p |Phi_d><Phi_d| + (1-p)/d^2 * Id
DensityMatrix isotropic_state(Dim d, double p);

// Root of raw(rho(p)) = 0 on the isotropic family, by bisection to 1e-10
// after verifying a single sign change on a scan of [0,1]. Throws if the scan
// finds no (or more than one) sign change.
double isotropic_threshold(Dim d);

}  // namespace gconc::witness
