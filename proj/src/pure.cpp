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

#include "gconc/pure.hpp"

#include <cmath>

#include "gconc/parallel.hpp"

namespace gconc::pure {

double cg_pure(const PureState& psi) {
  SchmidtSpectrum sp = schmidt(psi);
  const int d = psi.d();
  double prod = 1.0;
  for (int i = 0; i < d; ++i) {
    if (sp[i] == 0.0) return 0.0;
    prod *= sp[i];
  }
  if (prod > 0.0) {
    return d * std::pow(prod, 2.0 / d);
  }
  // Product underflowed; redo in log space.
  double log_sum = 0.0;
  for (int i = 0; i < d; ++i) log_sum += std::log(sp[i]);
  return d * std::exp(2.0 / d * log_sum);
}

double cg_pure_det(const PureState& psi) {
  const int d = psi.d();
  double adet = std::abs(psi.amplitudes().determinant());
  return d * std::pow(adet, 2.0 / d);
}

double c2_pure(const PureState& psi) {
  const int d = psi.d();
  Matrix rho_a = partial_trace(dm_from_pure(psi), Side::A);
  double purity = (rho_a * rho_a).trace().real();
  double arg = static_cast<double>(d) / (d - 1) * (1.0 - purity);
  if (arg < 0.0) arg = 0.0;
  return std::sqrt(arg);
}

double cg_pure_lower(const PureState& psi) {
  const int d = psi.d();
  const Matrix& c = psi.amplitudes();

  Cplx diag_sum = 0;
  double diag_abs2 = 0;
  for (int i = 0; i < d; ++i) {
    diag_sum += c(i, i);
    diag_abs2 += std::norm(c(i, i));
  }
  // sum_{i != j} c_ii c_jj^* = |sum_i c_ii|^2 - sum_i |c_ii|^2; real by
  // conjugate pairing, taken explicitly.
  double cross = std::norm(diag_sum) - diag_abs2;

  Eigen::MatrixXd mod(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) mod(i, j) = std::abs(c(i, j));
  }
  const double expo = 2.0 / d;
  double perm = par::permutation_sum(
      d,
      [&](const int* sigma) {
        double prod = 1.0;
        for (int i = 0; i < d; ++i) {
          double f = mod(i, sigma[i]);
          if (f == 0.0) return 0.0;
          prod *= f;
        }
        if (prod > 0.0) return std::pow(prod, expo);
        double log_sum = 0.0;
        for (int i = 0; i < d; ++i) log_sum += std::log(mod(i, sigma[i]));
        return std::exp(expo * log_sum);
      },
      par::Exec::openmp);

  return cross - (d - 2) * diag_abs2 - d * perm;
}

PureCurvePoint cg_of_F(Dim dim, double F) {
  const int d = dim.value();
  const double lo = static_cast<double>(d - 1) / d;
  if (F < lo - 1e-12 || F > 1.0 + 1e-12) {
    throw std::domain_error("cg_of_F: F must lie in [(d-1)/d, 1]");
  }
  if (F < lo) F = lo;
  if (F > 1.0) F = 1.0;
  const double sd = std::sqrt(static_cast<double>(d));
  // alpha = (sqrt(F) - sqrt((d-1)(1-F))) / sqrt(d), written as a difference
  // of squares: the direct form cancels catastrophically at F = (d-1)/d and
  // the 2/d root amplifies the residue.
  double denom = std::sqrt(F) + std::sqrt((d - 1.0) * (1.0 - F));
  double alpha = sd * (F - lo) / denom;
  if (alpha < 0.0) alpha = 0.0;
  double beta = (std::sqrt(F) + std::sqrt(1.0 - F) / std::sqrt(d - 1.0)) / sd;
  double cg = d * std::pow(alpha * std::pow(beta, d - 1), 2.0 / d);
  if (cg > 1.0) cg = 1.0;
  return PureCurvePoint{F, alpha, beta, cg};
}

}  // namespace gconc::pure
