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

#include "gconc/core.hpp"

#include <cmath>
#include <string>

namespace gconc {

namespace {
constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-9;

void check_hermitian(const Matrix& m, double tol, const char* what) {
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw std::invalid_argument(std::string(what) +
                                ": not Hermitian, max |m - m^dag| = " +
                                std::to_string(dev));
  }
}
}  // namespace

Dim::Dim(int d, int cap) : d_(d) {
  if (d < 2) {
    throw std::invalid_argument("Dim: local dimension must be >= 2, got " +
                                std::to_string(d));
  }
  if (d > cap) {
    throw std::invalid_argument("Dim: local dimension " + std::to_string(d) +
                                " exceeds cap " + std::to_string(cap));
  }
}

PureState::PureState(Dim d, Matrix amplitudes) : d_(d), c_(std::move(amplitudes)) {
  const int n = d_.value();
  if (c_.rows() != n || c_.cols() != n) {
    throw std::invalid_argument("PureState: amplitude matrix must be d x d");
  }
  double norm2 = c_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw std::invalid_argument(
        "PureState: squared norm deviates from 1 by " +
        std::to_string(std::abs(norm2 - 1.0)));
  }
}

DensityMatrix DensityMatrix::validated(Dim d, Matrix entries) {
  const int n = d.value() * d.value();
  if (entries.rows() != n || entries.cols() != n) {
    throw std::invalid_argument("DensityMatrix: entries must be d^2 x d^2");
  }
  check_hermitian(entries, kHermTol, "DensityMatrix");
  double tr = entries.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                std::to_string(std::abs(tr - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries, Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPsdTol) {
    throw std::invalid_argument("DensityMatrix: minimum eigenvalue " +
                                std::to_string(min_eig) + " below -1e-9");
  }
  return DensityMatrix(d, std::move(entries));
}

DensityMatrix DensityMatrix::trusted(Dim d, Matrix entries) {
  return DensityMatrix(d, std::move(entries));
}

SchmidtSpectrum::SchmidtSpectrum(RVector lambdas) : lambdas_(std::move(lambdas)) {
  double sum2 = 0.0;
  for (int i = 0; i < lambdas_.size(); ++i) {
    if (lambdas_[i] < 0) {
      throw std::invalid_argument("SchmidtSpectrum: negative coefficient");
    }
    if (i > 0 && lambdas_[i] > lambdas_[i - 1] + 1e-14) {
      throw std::invalid_argument("SchmidtSpectrum: not sorted nonincreasing");
    }
    sum2 += lambdas_[i] * lambdas_[i];
  }
  if (std::abs(sum2 - 1.0) > kTraceTol) {
    throw std::invalid_argument(
        "SchmidtSpectrum: squared coefficients sum deviates from 1 by " +
        std::to_string(std::abs(sum2 - 1.0)));
  }
}

UnnormalizedState UnnormalizedState::validated(Dim d, Matrix entries) {
  const int n = d.value() * d.value();
  if (entries.rows() != n || entries.cols() != n) {
    throw std::invalid_argument("UnnormalizedState: entries must be d^2 x d^2");
  }
  check_hermitian(entries, kHermTol, "UnnormalizedState");
  double tr = entries.trace().real();
  if (!(tr > 0)) {
    throw std::invalid_argument("UnnormalizedState: trace must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdTol * std::max(1.0, tr)) {
    throw std::invalid_argument("UnnormalizedState: not PSD within tolerance");
  }
  return UnnormalizedState(d, std::move(entries));
}

UnnormalizedState UnnormalizedState::trusted(Dim d, Matrix entries) {
  return UnnormalizedState(d, std::move(entries));
}

double UnnormalizedState::trace() const { return tau_.trace().real(); }

DensityMatrix UnnormalizedState::normalized() const {
  double tr = trace();
  if (!(tr > 0)) {
    throw std::domain_error("UnnormalizedState: cannot normalize zero trace");
  }
  return DensityMatrix::trusted(d_, tau_ / tr);
}

DensityMatrix dm_from_pure(const PureState& psi) {
  const int d = psi.d();
  CVector v(d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      v[composite_index(j, k, d)] = psi.amplitudes()(j, k);
    }
  }
  return DensityMatrix::trusted(psi.dim(), v * v.adjoint());
}

Matrix partial_trace(const Matrix& rho, int d, Side side) {
  Matrix out = Matrix::Zero(d, d);
  if (side == Side::A) {
    for (int j = 0; j < d; ++j) {
      for (int jp = 0; jp < d; ++jp) {
        Cplx s = 0;
        for (int k = 0; k < d; ++k) {
          s += rho(composite_index(j, k, d), composite_index(jp, k, d));
        }
        out(j, jp) = s;
      }
    }
  } else {
    for (int k = 0; k < d; ++k) {
      for (int kp = 0; kp < d; ++kp) {
        Cplx s = 0;
        for (int j = 0; j < d; ++j) {
          s += rho(composite_index(j, k, d), composite_index(j, kp, d));
        }
        out(k, kp) = s;
      }
    }
  }
  return out;
}

Matrix partial_trace(const DensityMatrix& rho, Side side) {
  return partial_trace(rho.entries(), rho.d(), side);
}

Matrix partial_trace(const UnnormalizedState& tau, Side side) {
  return partial_trace(tau.entries(), tau.d(), side);
}

SchmidtSpectrum schmidt(const PureState& psi) {
  Eigen::JacobiSVD<Matrix> svd(psi.amplitudes());
  RVector sv = svd.singularValues();
  // JacobiSVD returns them sorted nonincreasing already.
  return SchmidtSpectrum(std::move(sv));
}

PureState max_entangled(Dim d) {
  const int n = d.value();
  Matrix c = Matrix::Identity(n, n) / std::sqrt(static_cast<double>(n));
  return PureState(d, std::move(c));
}

double fidelity_phi_entries(const Matrix& rho, int d) {
  Cplx s = 0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      s += rho(composite_index(j, j, d), composite_index(k, k, d));
    }
  }
  double f = s.real() / d;
  if (f < 0.0) f = 0.0;
  if (f > 1.0) f = 1.0;
  return f;
}

double fidelity_phi(const DensityMatrix& rho) {
  return fidelity_phi_entries(rho.entries(), rho.d());
}

double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.d() != b.d()) {
    throw std::invalid_argument("hs_distance: dimension mismatch");
  }
  return (a.entries() - b.entries()).norm();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {
UnnormalizedState apply_local_entries(const Matrix& rho, Dim dim,
                                      const Matrix& a, const Matrix& b) {
  const int d = dim.value();
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
    throw std::invalid_argument("apply_local: operators must be d x d");
  }
  Eigen::FullPivLU<Matrix> lua(a);
  Eigen::FullPivLU<Matrix> lub(b);
  if (!lua.isInvertible() || !lub.isInvertible()) {
    throw std::invalid_argument("apply_local: singular local operator");
  }
  Matrix op = kron(a, b);
  return UnnormalizedState::trusted(dim, op * rho * op.adjoint());
}
}  // namespace

UnnormalizedState apply_local(const DensityMatrix& rho, const Matrix& a,
                              const Matrix& b) {
  return apply_local_entries(rho.entries(), rho.dim(), a, b);
}

UnnormalizedState apply_local(const UnnormalizedState& tau, const Matrix& a,
                              const Matrix& b) {
  return apply_local_entries(tau.entries(), tau.dim(), a, b);
}

DensityMatrix conjugate_unitary(const DensityMatrix& rho, const Matrix& ua,
                                const Matrix& ub) {
  Matrix op = kron(ua, ub);
  return DensityMatrix::trusted(rho.dim(), op * rho.entries() * op.adjoint());
}

}  // namespace gconc
