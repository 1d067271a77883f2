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

#include "gconc/slopt.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "gconc/axisym.hpp"
#include "gconc/parallel.hpp"
#include "gconc/random.hpp"

namespace gconc::slopt {

namespace {

constexpr double kVanishTol = 1e-12;

double relative_identity_deviation(const Matrix& m, int d) {
  double tr = m.trace().real();
  if (!(tr > 0)) return std::numeric_limits<double>::infinity();
  Matrix dev = m / tr - Matrix::Identity(d, d) / d;
  return dev.norm();
}

CVector vec_row_major(const Matrix& w, int d) {
  CVector v(d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) v[composite_index(j, k, d)] = w(j, k);
  }
  return v;
}

Matrix unvec_row_major(const CVector& v, int d) {
  Matrix m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) m(j, k) = v[composite_index(j, k, d)];
  }
  return m;
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

Matrix marginal_filter(const Matrix& marginal, int d) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(marginal);
  const RVector& ev = es.eigenvalues();
  if (ev.minCoeff() <= 0) {
    throw std::domain_error("marginal_filter: marginal not positive definite");
  }
  double log_det = 0;
  for (int i = 0; i < d; ++i) log_det += std::log(ev[i]);
  double scale = std::exp(log_det / (2.0 * d));
  RVector inv_sqrt = ev.cwiseSqrt().cwiseInverse();
  Matrix f = es.eigenvectors() * inv_sqrt.asDiagonal() *
             es.eigenvectors().adjoint() * scale;
  return f;
}

NormalFormResult normal_form(const DensityMatrix& rho, double tol,
                             int max_iter) {
  const int d = rho.d();
  Matrix tau = rho.entries();
  std::vector<double> history;
  history.push_back(tau.trace().real());

  bool converged = false;
  bool vanished = false;
  int iterations = 0;

  for (int it = 0; it <= max_iter; ++it) {
    double tr = tau.trace().real();
    if (tr < kVanishTol) {
      vanished = true;
      iterations = it;
      break;
    }
    Matrix ma = partial_trace(tau, d, Side::A);
    Matrix mb = partial_trace(tau, d, Side::B);
    if (relative_identity_deviation(ma, d) <= tol &&
        relative_identity_deviation(mb, d) <= tol) {
      converged = true;
      iterations = it;
      break;
    }
    if (it == max_iter) {
      iterations = it;
      break;
    }

    Side side = (it % 2 == 0) ? Side::A : Side::B;
    const Matrix& m = (side == Side::A) ? ma : mb;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.eigenvalues().minCoeff() / tr < kVanishTol) {
      vanished = true;
      iterations = it;
      break;
    }
    double log_det = 0;
    for (int i = 0; i < d; ++i) log_det += std::log(es.eigenvalues()[i]);
    double scale = std::exp(log_det / (2.0 * d));
    Matrix f = es.eigenvectors() *
               es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
               es.eigenvectors().adjoint() * scale;
    Matrix op = (side == Side::A) ? kron(f, Matrix::Identity(d, d))
                                  : kron(Matrix::Identity(d, d), f);
    tau = op * tau * op.adjoint();
    tau = 0.5 * (tau + tau.adjoint().eval());  // keep Hermitian against drift
    history.push_back(tau.trace().real());
  }

  double trace_factor = tau.trace().real();
  NormalFormResult res{UnnormalizedState::trusted(rho.dim(), std::move(tau)),
                       trace_factor, converged, iterations, vanished,
                       std::move(history)};
  return res;
}

FefResult maximize_fef(const DensityMatrix& rho, int restarts,
                       std::uint64_t seed) {
  if (restarts < 1) {
    throw std::invalid_argument("maximize_fef: restarts must be >= 1");
  }
  const int d = rho.d();
  const Matrix& r = rho.entries();

  // One rho * vec(W) product serves both the objective and the next update.
  auto image = [&](const Matrix& w) {
    return unvec_row_major(r * vec_row_major(w, d), d);
  };
  auto overlap = [&](const Matrix& w, const Matrix& m) {
    Cplx s = 0;
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) s += std::conj(w(j, k)) * m(j, k);
    }
    return s.real() / d;
  };

  struct Start {
    double f = -1;
    Matrix w;
  };
  std::vector<Start> results(static_cast<std::size_t>(restarts));

  par::run_indexed(
      static_cast<std::size_t>(restarts),
      [&](std::size_t idx) {
        Matrix w;
        if (idx == 0) {
          w = Matrix::Identity(d, d);
        } else {
          auto gen = rng::engine(rng::derive_seed(seed, idx));
          w = rng::haar_unitary(d, gen);
        }
        Matrix m = image(w);
        double f = overlap(w, m);
        for (int iter = 0; iter < 200; ++iter) {
          if (m.norm() < 1e-300) break;
          Matrix w_next = polar_unitary(m);
          Matrix m_next = image(w_next);
          double f_next = overlap(w_next, m_next);
          if (f_next < f - 1e-12) break;  // monotone update violated, keep w
          double delta = f_next - f;
          w = std::move(w_next);
          m = std::move(m_next);
          f = f_next;
          if (std::abs(delta) < 1e-12) break;
        }
        results[idx] = Start{f, std::move(w)};
      },
      par::Exec::openmp);

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].f > results[best].f) best = i;
  }
  return FefResult{results[best].f, results[best].w, restarts};
}

DensityMatrix rotate_to_phi(const DensityMatrix& rho, const Matrix& w) {
  const int d = rho.d();
  // (I (x) conj(W)) maps |Phi_W> back to |Phi_d>: amplitude matrices
  // transform as c -> A c B^T and W (conj(W))^T = W W^dag = Id.
  return conjugate_unitary(rho, Matrix::Identity(d, d), w.conjugate());
}

BoundReport best_bound(const DensityMatrix& rho, const BoundConfig& config) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  const int d = rho.d();
  BoundReport report;
  report.d = d;
  report.seed = config.seed;
  report.fidelity = fidelity_phi(rho);

  DensityMatrix state = rho;
  double trace_factor = 1.0;

  if (config.use_nf) {
    auto t0 = clock::now();
    NormalFormResult nf = normal_form(rho);
    report.timings_ms["normal_form"] = ms_since(t0);
    report.nf_used = true;
    report.nf_converged = nf.converged;
    report.trace_factor = nf.trace_factor;
    if (nf.vanished) {
      report.nf_vanished = true;
      report.final_bound = 0.0;
      auto t1 = clock::now();
      for (int k = 1; k <= d - 1; ++k) {
        report.distance_bounds[k] = axisym::distance_lower_bound(rho, k);
      }
      report.timings_ms["distance"] = ms_since(t1);
      return report;
    }
    state = nf.tau.normalized();
    trace_factor = nf.trace_factor;
  }

  if (config.use_lu) {
    auto t0 = clock::now();
    FefResult fef =
        maximize_fef(state, config.restarts, rng::derive_seed(config.seed, 1));
    state = rotate_to_phi(state, fef.correlation_unitary);
    report.fidelity_optimized = fef.f_max;
    report.timings_ms["lu_opt"] = ms_since(t0);
  }

  if (d <= config.witness_max_d) {
    auto t0 = clock::now();
    witness::WitnessResult wr =
        config.use_phases
            ? witness::phase_optimized_bg(state, config.restarts,
                                          rng::derive_seed(config.seed, 2))
            : witness::bg_witness(state);
    report.witness = wr;
    report.witness_bound = trace_factor * wr.raw;
    report.timings_ms["witness"] = ms_since(t0);
  }

  {
    auto t0 = clock::now();
    double f_state = axisym::project_axisym(state).fidelity();
    f_state = std::min(std::max(f_state, 0.0), 1.0);  // trim fp residue
    report.axisym_bound = trace_factor * axisym::cg_axisym(f_state, rho.dim());
    report.timings_ms["axisym"] = ms_since(t0);
  }

  double best = report.axisym_bound;
  if (report.witness_bound && *report.witness_bound > best) {
    best = *report.witness_bound;
  }
  report.final_bound = best > 0 ? best : 0.0;

  {
    auto t0 = clock::now();
    for (int k = 1; k <= d - 1; ++k) {
      report.distance_bounds[k] = axisym::distance_lower_bound(rho, k);
    }
    report.timings_ms["distance"] = ms_since(t0);
  }
  return report;
}

}  // namespace gconc::slopt
