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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace gconc {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Permutation-based quantities scale as d!, so the local dimension is capped.
// The cap can be raised explicitly (the CLI exposes --max-dim).
inline constexpr int kDefaultDimCap = 16;

// Local Hilbert-space dimension of one party; the joint space is d x d.
class Dim {
 public:
  explicit Dim(int d, int cap = kDefaultDimCap);
  int value() const { return d_; }

 private:
  int d_;
};

// Pure bipartite state stored as its d x d amplitude matrix c, where c(j,k)
// is the coefficient of |jk>. Unit norm enforced to 1e-12.
class PureState {
 public:
  PureState(Dim d, Matrix amplitudes);
  int d() const { return d_.value(); }
  Dim dim() const { return d_; }
  const Matrix& amplitudes() const { return c_; }

 private:
  Dim d_;
  Matrix c_;
};

// Composite-basis index convention: |jk> maps to row j*d + k (row-major).
inline int composite_index(int j, int k, int d) { return j * d + k; }

// d^2 x d^2 density matrix. `validated` enforces hermiticity (1e-10),
// unit trace (1e-10) and spectrum >= -1e-9; `trusted` skips the checks and is
// reserved for constructions that guarantee them.
class DensityMatrix {
 public:
  static DensityMatrix validated(Dim d, Matrix entries);
  static DensityMatrix trusted(Dim d, Matrix entries);

  int d() const { return d_.value(); }
  Dim dim() const { return d_; }
  const Matrix& entries() const { return rho_; }

 private:
  DensityMatrix(Dim d, Matrix rho) : d_(d), rho_(std::move(rho)) {}
  Dim d_;
  Matrix rho_;
};

// Nonincreasing Schmidt coefficients with squares summing to 1.
class SchmidtSpectrum {
 public:
  explicit SchmidtSpectrum(RVector lambdas);
  const RVector& lambdas() const { return lambdas_; }
  int size() const { return static_cast<int>(lambdas_.size()); }
  double operator[](int i) const { return lambdas_[i]; }

 private:
  RVector lambdas_;
};

// Hermitian PSD matrix with positive (not necessarily unit) trace; produced
// by local filtering and non-unitary local maps.
class UnnormalizedState {
 public:
  static UnnormalizedState validated(Dim d, Matrix entries);
  static UnnormalizedState trusted(Dim d, Matrix entries);

  int d() const { return d_.value(); }
  Dim dim() const { return d_; }
  const Matrix& entries() const { return tau_; }
  double trace() const;
  DensityMatrix normalized() const;

 private:
  UnnormalizedState(Dim d, Matrix tau) : d_(d), tau_(std::move(tau)) {}
  Dim d_;
  Matrix tau_;
};

enum class Side { A, B };

DensityMatrix dm_from_pure(const PureState& psi);

// Reduced state of the requested party (the other party is traced out).
Matrix partial_trace(const Matrix& rho, int d, Side side);
Matrix partial_trace(const DensityMatrix& rho, Side side);
Matrix partial_trace(const UnnormalizedState& tau, Side side);

SchmidtSpectrum schmidt(const PureState& psi);

// |Phi_d> = (1/sqrt(d)) sum_j |jj>
PureState max_entangled(Dim d);

// Overlap with |Phi_d>, clamped to [0,1].
double fidelity_phi(const DensityMatrix& rho);
double fidelity_phi_entries(const Matrix& rho, int d);

// Frobenius norm of the difference. Throws on dimension mismatch.
double hs_distance(const DensityMatrix& a, const DensityMatrix& b);

// (A (x) B) rho (A (x) B)^dagger, not renormalized. A and B must be
// nonsingular.
UnnormalizedState apply_local(const DensityMatrix& rho, const Matrix& a,
                              const Matrix& b);
UnnormalizedState apply_local(const UnnormalizedState& tau, const Matrix& a,
                              const Matrix& b);

// Unitary conjugation convenience; trace is preserved so the result stays a
// density matrix.
DensityMatrix conjugate_unitary(const DensityMatrix& rho, const Matrix& ua,
                                const Matrix& ub);

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace gconc
