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

namespace gconc::axisym {

// Twirl-invariant two-parameter family, stored as
//   a = <jj|rho|jj>   (every diagonal-sector population)
//   b = <jj|rho|kk>   (every diagonal-sector coherence, j != k, real)
//   c = <jk|rho|jk>   (every off-sector population, j != k)
// Trace fixes d a + d(d-1) c = 1; positivity requires a >= b >= -a/(d-1)
// and c >= 0 (small negative slack tolerated). Fidelity F = a + (d-1) b.
class AxisymState {
 public:
  AxisymState(Dim d, double a, double b, double c);
  int d() const { return d_.value(); }
  Dim dim() const { return d_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double fidelity() const { return a_ + (d_.value() - 1) * b_; }

 private:
  Dim d_;
  double a_, b_, c_;
};

// Cartesian coordinates on the invariant family in which Euclidean distance
// equals Hilbert-Schmidt distance of the corresponding matrices.
struct HsCoords {
  double x;
  double y;
};

// Group average (twirl) of rho onto the invariant family. Preserves the
// fidelity with |Phi_d> exactly.
AxisymState project_axisym(const DensityMatrix& rho);

DensityMatrix axisym_to_matrix(const AxisymState& s);

// Exact G-concurrence on the family: max(1 - d(1-F), 0).
double cg_axisym(double F, Dim d);

// Exact 2-concurrence on the family: max(0, sqrt(2d/(d-1)) (F - 1/d)).
double c2_axisym(double F, Dim d);

HsCoords coords_xy(const AxisymState& s);

// Certified lower bound on the Hilbert-Schmidt distance from rho to any
// state of Schmidt number <= k: the exact 2D distance from the twirled state
// to the invariant-family region {F <= k/d}. Requires 1 <= k <= d-1.
double distance_lower_bound(const DensityMatrix& rho, int k);

// Same bound evaluated directly on an already twirled state.
double distance_lower_bound(const AxisymState& s, int k);

// Mixture p |Phi><Phi| + (1-p)[q r1 + (1-q) r2] where r1 is the normalized
// complement of |Phi><Phi| and r2 the uniform off-sector state.
AxisymState axisym_from_pq(Dim d, double p, double q);

// The white-noise segment through |Phi_d>, extended to the F = 0 edge of the
// family; covers every fidelity in [0, 1].
AxisymState axisym_from_fidelity(Dim d, double F);

}  // namespace gconc::axisym
