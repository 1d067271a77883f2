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

#include "gconc/witness.hpp"

#include <cmath>
#include <vector>

#include "gconc/parallel.hpp"
#include "gconc/random.hpp"

namespace gconc::witness {

EntryAudit expected_entry_audit(int d) {
  EntryAudit a;
  a.populations = static_cast<std::size_t>(d) * d;
  a.coherences = static_cast<std::size_t>(d) * (d - 1) / 2;
  return a;
}

WitnessInputs WitnessInputs::extract(const DensityMatrix& rho) {
  const int d = rho.d();
  const Matrix& r = rho.entries();
  WitnessInputs in;
  in.d = d;
  in.populations.resize(d, d);
  in.diag_coherences = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      int idx = composite_index(j, k, d);
      in.populations(j, k) = r(idx, idx).real();
      ++in.audit.populations;
    }
  }
  for (int i = 0; i < d; ++i) {
    in.diag_coherences(i, i) = in.populations(i, i);
    for (int j = i + 1; j < d; ++j) {
      Cplx v = r(composite_index(i, i, d), composite_index(j, j, d));
      in.diag_coherences(i, j) = v;
      in.diag_coherences(j, i) = std::conj(v);
      ++in.audit.coherences;
    }
  }
  return in;
}

namespace {

double permutation_term(const Eigen::MatrixXd& pop, int d) {
  const double expo = 1.0 / d;
  double sum = par::permutation_sum(
      d,
      [&](const int* sigma) {
        double prod = 1.0;
        for (int i = 0; i < d; ++i) {
          double f = pop(i, sigma[i]);
          if (f <= 0.0) return 0.0;
          prod *= f;
        }
        if (prod > 0.0) return std::pow(prod, expo);
        double log_sum = 0.0;
        for (int i = 0; i < d; ++i) log_sum += std::log(pop(i, sigma[i]));
        return std::exp(expo * log_sum);
      },
      par::Exec::openmp);
  return d * sum;
}

double diagonal_term(const Eigen::MatrixXd& pop, int d) {
  double s = 0;
  for (int i = 0; i < d; ++i) s += pop(i, i);
  return (d - 2) * s;
}

// positive term for coherences rotated by unit-modulus z:
//   sum_{i != j} Re(conj(z_i) M_ij z_j) = Re(z^dag M z) - sum_i M_ii
double positive_term_rotated(const Matrix& m, const CVector& z) {
  Cplx q = (z.adjoint() * m * z)(0, 0);
  double diag = 0;
  for (int i = 0; i < m.rows(); ++i) diag += m(i, i).real();
  return q.real() - diag;
}

WitnessResult assemble(const WitnessInputs& in, double positive) {
  WitnessResult res;
  res.positive_term = positive;
  res.diagonal_term = diagonal_term(in.populations, in.d);
  res.permutation_term = permutation_term(in.populations, in.d);
  res.raw = res.positive_term - res.diagonal_term - res.permutation_term;
  res.clamped = res.raw > 0 ? res.raw : 0.0;
  return res;
}

}  // namespace

WitnessResult bg_witness(const WitnessInputs& in) {
  double positive = 0;
  for (int i = 0; i < in.d; ++i) {
    for (int j = 0; j < in.d; ++j) {
      if (i != j) positive += in.diag_coherences(i, j).real();
    }
  }
  return assemble(in, positive);
}

WitnessResult bg_witness(const DensityMatrix& rho) {
  return bg_witness(WitnessInputs::extract(rho));
}

WitnessResult bg_with_phases(const WitnessInputs& in, const RVector& phases) {
  const int d = in.d;
  if (phases.size() != 2 * d) {
    throw std::invalid_argument("bg_with_phases: need 2d phases");
  }
  CVector z(d);
  for (int i = 0; i < d; ++i) {
    // z_i = e^{-i (theta_i + phi_i)}; only the sums enter the coherences.
    z[i] = std::exp(Cplx(0, -(phases[i] + phases[d + i])));
  }
  WitnessResult res = assemble(in, positive_term_rotated(in.diag_coherences, z));
  res.phases_applied = phases;
  return res;
}

namespace {

struct PhaseStart {
  double value = 0;
  CVector z;
};

// Cyclic coordinate ascent on z_i = e^{-i s_i}; each update is the exact
// single-coordinate maximizer, so the objective is nondecreasing.
PhaseStart ascend(const Matrix& m, CVector z, int max_sweeps = 500) {
  const int d = static_cast<int>(z.size());
  double value = positive_term_rotated(m, z);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (int i = 0; i < d; ++i) {
      Cplx w = 0;
      for (int j = 0; j < d; ++j) {
        if (j != i) w += m(i, j) * z[j];
      }
      double a = std::abs(w);
      if (a > 0) z[i] = w / a;
    }
    double next = positive_term_rotated(m, z);
    if (next - value < 1e-12) {
      value = next;
      break;
    }
    value = next;
  }
  return PhaseStart{value, std::move(z)};
}

}  // namespace

WitnessResult phase_optimized_bg(const DensityMatrix& rho, int restarts,
                                 std::uint64_t seed) {
  if (restarts < 1) {
    throw std::invalid_argument("phase_optimized_bg: restarts must be >= 1");
  }
  WitnessInputs in = WitnessInputs::extract(rho);
  const int d = in.d;
  const Matrix& m = in.diag_coherences;

  // Start 0: identity phases (guarantees we never fall below bg_witness).
  // Start 1: phases of the leading eigenvector of the coherence matrix.
  // Starts 2..: seeded uniform random phases.
  const int total_starts = restarts + 2;
  std::vector<PhaseStart> results(static_cast<std::size_t>(total_starts));
  par::run_indexed(
      static_cast<std::size_t>(total_starts),
      [&](std::size_t idx) {
        CVector z(d);
        if (idx == 0) {
          z.setOnes();
        } else if (idx == 1) {
          Eigen::SelfAdjointEigenSolver<Matrix> es(m);
          CVector v = es.eigenvectors().col(d - 1);
          for (int i = 0; i < d; ++i) {
            double a = std::abs(v[i]);
            z[i] = a > 1e-15 ? v[i] / a : Cplx(1, 0);
          }
        } else {
          auto gen = rng::engine(rng::derive_seed(seed, idx));
          std::uniform_real_distribution<double> uni(0.0, 2 * M_PI);
          for (int i = 0; i < d; ++i) z[i] = std::exp(Cplx(0, uni(gen)));
        }
        results[idx] = ascend(m, std::move(z));
      },
      par::Exec::openmp);

  // Deterministic reduction: max value, ties broken by lowest start index.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }

  const CVector& z = results[best].z;
  RVector phases = RVector::Zero(2 * d);
  for (int i = 0; i < d; ++i) phases[i] = -std::arg(z[i]);

  WitnessResult res = assemble(in, results[best].value);
  res.phases_applied = phases;
  return res;
}

DensityMatrix isotropic_state(Dim dim, double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("isotropic_state: p must lie in [0,1]");
  }
  const int d = dim.value();
  Matrix rho = Matrix::Identity(d * d, d * d) * ((1.0 - p) / (d * d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      rho(composite_index(j, j, d), composite_index(k, k, d)) += p / d;
    }
  }
  return DensityMatrix::trusted(dim, std::move(rho));
}

double isotropic_threshold(Dim dim) {
  auto raw_at = [&](double p) {
    return bg_witness(isotropic_state(dim, p)).raw;
  };

  const int scan_points = 201;
  double prev_p = 0.0;
  double prev_v = raw_at(0.0);
  int sign_changes = 0;
  double lo = 0.0, hi = 1.0;
  for (int i = 1; i < scan_points; ++i) {
    double p = static_cast<double>(i) / (scan_points - 1);
    double v = raw_at(p);
    if ((prev_v < 0 && v >= 0) || (prev_v >= 0 && v < 0)) {
      ++sign_changes;
      lo = prev_p;
      hi = p;
    }
    prev_p = p;
    prev_v = v;
  }
  if (sign_changes != 1) {
    throw std::domain_error(
        "isotropic_threshold: expected exactly one sign change, found " +
        std::to_string(sign_changes));
  }

  double flo = raw_at(lo);
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    double fm = raw_at(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gconc::witness
