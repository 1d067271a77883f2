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

#include "gconc/oracles.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "gconc/parallel.hpp"
#include "gconc/random.hpp"

namespace gconc::oracles {

namespace {

// Cofactor matrix: cof(a,b) = d det(M) / d M(a,b). Finite at det(M) = 0,
// unlike det(M) inv(M)^T.
Matrix cofactor_matrix(const Matrix& m) {
  const int d = static_cast<int>(m.rows());
  Matrix cof(d, d);
  if (d == 2) {
    cof(0, 0) = m(1, 1);
    cof(0, 1) = -m(1, 0);
    cof(1, 0) = -m(0, 1);
    cof(1, 1) = m(0, 0);
    return cof;
  }
  Matrix minor(d - 1, d - 1);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      int mr = 0;
      for (int i = 0; i < d; ++i) {
        if (i == a) continue;
        int mc = 0;
        for (int j = 0; j < d; ++j) {
          if (j == b) continue;
          minor(mr, mc) = m(i, j);
          ++mc;
        }
        ++mr;
      }
      Cplx det = minor.determinant();
      cof(a, b) = ((a + b) % 2 == 0) ? det : -det;
    }
  }
  return cof;
}

Matrix unvec(const CVector& v, int d) {
  Matrix m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) m(j, k) = v[j * d + k];
  }
  return m;
}

// Ensemble average sum_k p_k C_G(psi_k) for unnormalized members phi_k:
// by degree-2 homogeneity this is just sum_k d |det unvec(phi_k)|^{2/d}.
double ensemble_value(const Matrix& cols, int d) {
  double total = 0;
  for (int k = 0; k < cols.cols(); ++k) {
    Matrix m = unvec(cols.col(k), d);
    total += d * std::pow(std::abs(m.determinant()), 2.0 / d);
  }
  return total;
}

enum class Objective { det2, roof };

// Value and Euclidean (Wirtinger) gradient with respect to the mixing
// unitary W, for ensembles cols0 * W.
double objective_and_gradient(const Matrix& cols0, const Matrix& w, int d,
                              Objective mode, Matrix& grad) {
  Matrix cols = cols0 * w;
  const int m = static_cast<int>(cols.cols());
  grad = Matrix::Zero(m, m);
  double value = 0;
  for (int k = 0; k < m; ++k) {
    Matrix mk = unvec(cols.col(k), d);
    Cplx det = mk.determinant();
    double adet = std::abs(det);
    Matrix cof = cofactor_matrix(mk);
    Matrix g_mk;
    if (mode == Objective::det2) {
      value += adet * adet;
      g_mk = det * cof.conjugate();
    } else {
      value += d * std::pow(adet, 2.0 / d);
      if (adet < 1e-30) continue;
      g_mk = std::pow(adet, 2.0 / d - 2.0) * det * cof.conjugate();
    }
    CVector g_phi(d * d);
    for (int j = 0; j < d; ++j) {
      for (int kk = 0; kk < d; ++kk) g_phi[j * d + kk] = g_mk(j, kk);
    }
    grad.col(k) = cols0.adjoint() * g_phi;
  }
  return value;
}

// Riemannian descent on U(m) along W exp(-sA) with A the skew part of
// W^dag grad; the geodesic is evaluated exactly via the eigendecomposition
// of iA, reused across the backtracking line search.
double stiefel_descent(const Matrix& cols0, int d, Objective mode, int iters,
                       Matrix& w) {
  const int m = static_cast<int>(w.rows());
  Matrix grad;
  double value = objective_and_gradient(cols0, w, d, mode, grad);
  double step = 0.5;
  for (int it = 0; it < iters; ++it) {
    Matrix a = w.adjoint() * grad;
    a = 0.5 * (a - a.adjoint().eval());
    double norm_a = a.norm();
    if (norm_a < 1e-13) break;
    Eigen::SelfAdjointEigenSolver<Matrix> es(Cplx(0, 1) * a);
    const RVector& b = es.eigenvalues();
    const Matrix& v = es.eigenvectors();
    double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);

    bool accepted = false;
    double s = step / scale;
    for (int back = 0; back < 25; ++back) {
      CVector ph(m);
      for (int i = 0; i < m; ++i) ph[i] = std::exp(Cplx(0, s * b[i]));
      Matrix w_try = w * (v * ph.asDiagonal() * v.adjoint());
      Matrix grad_try;
      double val_try = objective_and_gradient(cols0, w_try, d, mode, grad_try);
      if (val_try < value - 1e-16) {
        w = std::move(w_try);
        value = val_try;
        grad = std::move(grad_try);
        step = std::min(s * scale * 2.0, 4.0);
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) break;
    if (mode == Objective::det2 && value < 1e-18) break;
  }
  return value;
}

struct TrialOutcome {
  double value = std::numeric_limits<double>::infinity();
  int size = 0;
};

}  // namespace

UpperBoundResult convex_roof_upper(const DensityMatrix& rho, int trials,
                                   std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("convex_roof_upper: trials must be >= 1");
  }
  const int d = rho.d();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()[i] > 1e-12) keep.push_back(i);
  }
  const int rank = static_cast<int>(keep.size());
  Matrix sqrt_cols(d * d, rank);
  for (int i = 0; i < rank; ++i) {
    sqrt_cols.col(i) =
        es.eigenvectors().col(keep[i]) * std::sqrt(es.eigenvalues()[keep[i]]);
  }

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  par::run_indexed(
      static_cast<std::size_t>(trials),
      [&](std::size_t t) {
        int m = (t == 0) ? rank
                         : rank + static_cast<int>((t - 1) % (rank + 1));
        Matrix cols(d * d, m);
        if (t == 0) {
          cols = sqrt_cols;  // the eigen-ensemble itself
        } else {
          auto gen = rng::engine(rng::derive_seed(seed, t));
          Matrix u = rng::haar_unitary(m, gen);
          cols = sqrt_cols * u.topRows(rank);
        }
        double raw = ensemble_value(cols, d);
        Matrix w = Matrix::Identity(m, m);
        stiefel_descent(cols, d, Objective::det2, 300, w);
        double refined = stiefel_descent(cols, d, Objective::roof, 300, w);
        outcomes[t] = TrialOutcome{std::min(raw, refined), m};
      },
      par::Exec::openmp);

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].value < outcomes[best].value) best = i;
  }
  return UpperBoundResult{outcomes[best].value, trials, outcomes[best].size};
}

namespace {

double product_objective(const RVector& lam, int d) {
  double log_sum = 0;
  for (int i = 0; i < d; ++i) {
    if (lam[i] <= 0) return 0.0;
    log_sum += std::log(lam[i]);
  }
  return d * std::exp(2.0 / d * log_sum);
}

// Rescale a positive vector onto {sum = S, sum of squares = 1}; returns false
// when the affine-spherical projection has no solution along this ray.
bool reproject(RVector& x, double s_target, int d) {
  double x1 = x.sum();
  double x2 = x.squaredNorm();
  double denom = x2 - x1 * x1 / d;
  double numer = 1.0 - s_target * s_target / d;
  if (denom <= 1e-300 || numer < 0) return false;
  double a = std::sqrt(numer / denom);
  double b = (s_target - a * x1) / d;
  x = a * x + RVector::Constant(d, b);
  return true;
}

RVector projected_descent(RVector lam, double s_target, int d, int iters) {
  double f = product_objective(lam, d);
  for (int it = 0; it < iters; ++it) {
    if (f == 0.0) break;
    RVector g(d);
    for (int i = 0; i < d; ++i) g[i] = (2.0 / d) * f / lam[i];
    // Tangent projection against the constraint normals 1 and lam.
    RVector e1 = RVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
    RVector v = lam - lam.dot(e1) * e1;
    double vn = v.norm();
    RVector gt = g - g.dot(e1) * e1;
    if (vn > 1e-13) {
      RVector e2 = v / vn;
      gt -= gt.dot(e2) * e2;
    }
    double gn = gt.cwiseAbs().maxCoeff();
    if (gn < 1e-14) break;
    double s = 0.25 * lam.minCoeff() / gn;
    bool accepted = false;
    for (int back = 0; back < 30; ++back) {
      RVector trial = lam - s * gt;
      if (trial.minCoeff() > 1e-14 && reproject(trial, s_target, d) &&
          trial.minCoeff() > 0) {
        double f_try = product_objective(trial, d);
        if (f_try < f - 1e-15) {
          lam = std::move(trial);
          f = f_try;
          accepted = true;
          break;
        }
      }
      s *= 0.5;
    }
    if (!accepted) break;
  }
  return lam;
}

}  // namespace

double constrained_cg_min(Dim dim, double F, int trials, std::uint64_t seed) {
  const int d = dim.value();
  const double lo = static_cast<double>(d - 1) / d;
  if (F < lo - 1e-12 || F > 1.0 + 1e-12) {
    throw std::domain_error("constrained_cg_min: infeasible F");
  }
  if (F < lo) F = lo;
  if (F > 1.0) F = 1.0;
  if (F >= 1.0 - 1e-15) return 1.0;  // unique feasible point lam_j = 1/sqrt(d)
  const double s_target = std::sqrt(d * F);

  double best = std::numeric_limits<double>::infinity();
  RVector best_lam;

  // Stationary points have at most two distinct coefficient values; enumerate
  // every split and sign. The subtracted branches are written as differences
  // of squares; the direct forms cancel at the domain boundary and the 2/d
  // root amplifies the residue.
  for (int m = 1; m < d; ++m) {
    for (int sign = -1; sign <= 1; sign += 2) {
      double a0 = std::sqrt(F / d);
      double root_a = std::sqrt((d - m) / static_cast<double>(m) * (1 - F) / d);
      double root_b = std::sqrt(m / static_cast<double>(d - m) * (1 - F) / d);
      double alpha, beta;
      if (sign > 0) {
        alpha = a0 + root_a;
        beta = (d * F - m) / ((d - m) * static_cast<double>(d) * (a0 + root_b));
      } else {
        alpha = (d * F - (d - m)) / (m * static_cast<double>(d) * (a0 + root_a));
        beta = a0 + root_b;
      }
      if (alpha < -1e-12 || beta < -1e-12) continue;
      RVector lam(d);
      for (int i = 0; i < d; ++i) lam[i] = (i < m) ? alpha : beta;
      lam = lam.cwiseMax(0.0);
      if (std::abs(lam.sum() - s_target) > 1e-8 ||
          std::abs(lam.squaredNorm() - 1.0) > 1e-8) {
        continue;
      }
      double v = product_objective(lam, d);
      if (v < best) {
        best = v;
        best_lam = lam;
      }
    }
  }

  if (best_lam.size() == d && best > 0) {
    double v = product_objective(projected_descent(best_lam, s_target, d, 100), d);
    best = std::min(best, v);
  }

  auto gen = rng::engine(rng::derive_seed(seed, 0x6f7261636cULL));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    RVector x(d);
    bool ok = false;
    for (int attempt = 0; attempt < 50 && !ok; ++attempt) {
      for (int i = 0; i < d; ++i) x[i] = std::abs(normal(gen)) + 1e-3;
      ok = reproject(x, s_target, d) && x.minCoeff() > 0;
    }
    if (!ok) continue;
    double v = product_objective(projected_descent(x, s_target, d, 200), d);
    best = std::min(best, v);
  }
  return best;
}

double threshold_bisect(const std::function<double(double)>& f, double lo,
                        double hi, double tol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("threshold_bisect: need lo < hi");
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) {
    throw std::domain_error("threshold_bisect: no sign change on [lo, hi]");
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gconc::oracles
