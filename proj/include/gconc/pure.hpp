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

#include "gconc/core.hpp"

namespace gconc::pure {

// G-concurrence of a pure state: d times the geometric mean of the marginal
// eigenvalues, computed from the singular values of the amplitude matrix.
// Zero iff the state is Schmidt-rank deficient.
double cg_pure(const PureState& psi);

// Determinant route d*|det c|^{2/d}; agrees with cg_pure to 1e-9 for small d
// but underflows for d >= 10, so it serves as a cross-check only.
double cg_pure_det(const PureState& psi);

// 2-concurrence sqrt(d/(d-1) (1 - Tr rho_A^2)).
double c2_pure(const PureState& psi);

// Diagonal-element lower bound on cg_pure:
//   sum_{i != j} c_ii c_jj^* - (d-2) sum_i |c_ii|^2
//     - d sum_{sigma != id} |prod_i c_{i sigma(i)}|^{2/d}.
// May be negative. Cost is Theta(d! d).
double cg_pure_lower(const PureState& psi);

// Minimum G-concurrence over pure states with fixed overlap F with the
// maximally entangled state, valid for F in [(d-1)/d, 1]. The optimum has
// Schmidt vector (alpha, beta, ..., beta).
struct PureCurvePoint {
  double F;
  double alpha;
  double beta;
  double cg;
};

PureCurvePoint cg_of_F(Dim d, double F);

}  // namespace gconc::pure
