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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gconc/core.hpp"
#include "test_util.hpp"

using namespace gconc;

TEST_CASE("Dim enforces range and cap") {
  CHECK_THROWS_AS(Dim(1), std::invalid_argument);
  CHECK_THROWS_AS(Dim(17), std::invalid_argument);
  CHECK_NOTHROW(Dim(16));
  CHECK_NOTHROW(Dim(64, 64));
  CHECK(Dim(5).value() == 5);
}

TEST_CASE("PureState validates unit norm") {
  Matrix c = Matrix::Identity(2, 2);  // norm sqrt(2)
  CHECK_THROWS_AS(PureState(Dim(2), c), std::invalid_argument);
  CHECK_NOTHROW(PureState(Dim(2), c / std::sqrt(2.0)));
}

TEST_CASE("dm_from_pure on basis and Bell states") {
  PureState phi2 = max_entangled(Dim(2));
  DensityMatrix rho = dm_from_pure(phi2);
  CHECK(rho.entries()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rho.entries()(0, 3).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rho.entries()(3, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rho.entries()(3, 3).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(rho.entries()(1, 1)) < 1e-15);

  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = 1;
  DensityMatrix basis = dm_from_pure(PureState(Dim(2), c));
  CHECK(basis.entries()(0, 0).real() == doctest::Approx(1.0));
  CHECK(basis.entries().cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("dm_from_pure yields a rank-1 projector") {
  auto gen = rng::engine(11);
  for (int d = 2; d <= 4; ++d) {
    PureState psi = testutil::random_pure(d, gen);
    DensityMatrix rho = dm_from_pure(psi);
    CHECK(rho.entries().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
    RVector ev = es.eigenvalues();
    CHECK(ev.maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < ev.size() - 1; ++i) {
      CHECK(std::abs(ev[i]) < 1e-10);
    }
  }
}

TEST_CASE("partial_trace basics") {
  DensityMatrix phi3 = dm_from_pure(max_entangled(Dim(3)));
  Matrix ra = partial_trace(phi3, Side::A);
  CHECK((ra - Matrix::Identity(3, 3) / 3.0).norm() < 1e-12);

  Matrix c = Matrix::Zero(2, 2);
  c(0, 1) = 1;  // |01>
  Matrix rb = partial_trace(dm_from_pure(PureState(Dim(2), c)), Side::B);
  CHECK(rb(1, 1).real() == doctest::Approx(1.0));
  CHECK(std::abs(rb(0, 0)) < 1e-15);
}

TEST_CASE("partial_trace of a product state returns the factor") {
  auto gen = rng::engine(5);
  const int d = 3;
  Matrix xa = rng::gaussian_matrix(d, d, gen);
  Matrix xb = rng::gaussian_matrix(d, d, gen);
  Matrix rho_a = xa * xa.adjoint();
  rho_a /= rho_a.trace().real();
  Matrix rho_b = xb * xb.adjoint();
  rho_b /= rho_b.trace().real();
  DensityMatrix prod = DensityMatrix::trusted(Dim(d), kron(rho_a, rho_b));
  CHECK((partial_trace(prod, Side::A) - rho_a).norm() < 1e-12);
  CHECK((partial_trace(prod, Side::B) - rho_b).norm() < 1e-12);
}

TEST_CASE("schmidt spectra of canonical states") {
  for (int d = 2; d <= 5; ++d) {
    SchmidtSpectrum sp = schmidt(max_entangled(Dim(d)));
    for (int i = 0; i < d; ++i) {
      CHECK(sp[i] == doctest::Approx(1.0 / std::sqrt(double(d))).epsilon(1e-12));
    }
  }
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = 1;
  SchmidtSpectrum sp = schmidt(PureState(Dim(2), c));
  CHECK(sp[0] == doctest::Approx(1.0));
  CHECK(sp[1] == doctest::Approx(0.0));

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = std::sqrt(0.8);
  diag(1, 1) = std::sqrt(0.2);
  SchmidtSpectrum sp2 = schmidt(PureState(Dim(2), diag));
  CHECK(sp2[0] == doctest::Approx(std::sqrt(0.8)).epsilon(1e-12));
  CHECK(sp2[1] == doctest::Approx(std::sqrt(0.2)).epsilon(1e-12));
}

TEST_CASE("schmidt is invariant under local unitaries") {
  auto gen = rng::engine(7);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 2 + rep % 3;
    PureState psi = testutil::random_pure(d, gen);
    Matrix ua = rng::haar_unitary(d, gen);
    Matrix ub = rng::haar_unitary(d, gen);
    Matrix c2 = ua * psi.amplitudes() * ub.transpose();
    PureState rotated(Dim(d), c2);
    SchmidtSpectrum a = schmidt(psi);
    SchmidtSpectrum b = schmidt(rotated);
    for (int i = 0; i < d; ++i) {
      CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("max_entangled properties") {
  PureState phi2 = max_entangled(Dim(2));
  CHECK(phi2.amplitudes()(0, 0).real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(phi2.amplitudes()(0, 1)) < 1e-15);
  CHECK(fidelity_phi(dm_from_pure(max_entangled(Dim(3)))) ==
        doctest::Approx(1.0).epsilon(1e-13));
  SchmidtSpectrum sp = schmidt(max_entangled(Dim(4)));
  for (int i = 0; i < 4; ++i) CHECK(sp[i] == doctest::Approx(0.5));
}

TEST_CASE("fidelity_phi on canonical states") {
  const int d = 3;
  Matrix mixed = Matrix::Identity(d * d, d * d) / (d * d);
  CHECK(fidelity_phi(DensityMatrix::trusted(Dim(d), mixed)) ==
        doctest::Approx(1.0 / (d * d)).epsilon(1e-13));

  // isotropic p = 5/8 at d = 3 sits at fidelity 2/3
  double p = 5.0 / 8.0;
  Matrix iso = Matrix::Identity(9, 9) * ((1 - p) / 9);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) iso(j * 3 + j, k * 3 + k) += p / 3;
  }
  CHECK(fidelity_phi(DensityMatrix::trusted(Dim(3), iso)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("fidelity_phi agrees with the amplitude-trace form on pure states") {
  auto gen = rng::engine(13);
  for (int rep = 0; rep < 50; ++rep) {
    int d = 2 + rep % 4;
    PureState psi = testutil::random_pure(d, gen);
    Cplx tr = psi.amplitudes().trace();
    double direct = std::norm(tr) / d;
    CHECK(std::abs(fidelity_phi(dm_from_pure(psi)) - direct) < 1e-12);
  }
}

TEST_CASE("hs_distance") {
  auto gen = rng::engine(17);
  DensityMatrix a = testutil::random_mixed(3, gen);
  CHECK(hs_distance(a, a) == doctest::Approx(0.0));

  Matrix c00 = Matrix::Zero(2, 2), c11 = Matrix::Zero(2, 2);
  c00(0, 0) = 1;
  c11(1, 1) = 1;
  DensityMatrix p00 = dm_from_pure(PureState(Dim(2), c00));
  DensityMatrix p11 = dm_from_pure(PureState(Dim(2), c11));
  CHECK(hs_distance(p00, p11) == doctest::Approx(std::sqrt(2.0)));

  DensityMatrix b = testutil::random_mixed(3, gen);
  DensityMatrix c = testutil::random_mixed(3, gen);
  CHECK(hs_distance(a, c) <= hs_distance(a, b) + hs_distance(b, c) + 1e-12);

  DensityMatrix other = testutil::random_mixed(2, gen);
  CHECK_THROWS_AS(hs_distance(a, other), std::invalid_argument);
}

TEST_CASE("apply_local identity and unitaries") {
  auto gen = rng::engine(19);
  DensityMatrix rho = testutil::random_mixed(3, gen);
  UnnormalizedState same =
      apply_local(rho, Matrix::Identity(3, 3), Matrix::Identity(3, 3));
  CHECK((same.entries() - rho.entries()).norm() < 1e-13);

  Matrix ua = rng::haar_unitary(3, gen);
  Matrix ub = rng::haar_unitary(3, gen);
  UnnormalizedState rotated = apply_local(rho, ua, ub);
  CHECK(rotated.trace() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("apply_local rescales Schmidt coefficients per the SVD") {
  auto gen = rng::engine(23);
  PureState psi = testutil::random_pure(2, gen);
  Matrix a(2, 2);
  a << 2, 0, 0, 0.5;
  Matrix b = Matrix::Identity(2, 2);
  UnnormalizedState tau = apply_local(dm_from_pure(psi), a, b);

  Matrix scaled = a * psi.amplitudes() * b.transpose();
  Eigen::JacobiSVD<Matrix> svd(scaled);
  double trace_expect = scaled.squaredNorm();
  CHECK(tau.trace() == doctest::Approx(trace_expect).epsilon(1e-12));
  // Spectrum of the unnormalized marginal equals the squared singular values.
  Matrix ma = partial_trace(tau, Side::A);
  Eigen::SelfAdjointEigenSolver<Matrix> es(ma);
  RVector sv = svd.singularValues();
  CHECK(es.eigenvalues()(1) == doctest::Approx(sv[0] * sv[0]).epsilon(1e-10));
  CHECK(es.eigenvalues()(0) == doctest::Approx(sv[1] * sv[1]).epsilon(1e-10));
}

TEST_CASE("apply_local rejects singular operators") {
  auto gen = rng::engine(29);
  DensityMatrix rho = testutil::random_mixed(2, gen);
  Matrix sing = Matrix::Zero(2, 2);
  sing(0, 0) = 1;
  CHECK_THROWS_AS(apply_local(rho, sing, Matrix::Identity(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_local(rho, Matrix::Identity(2, 2), sing),
                  std::invalid_argument);
}

TEST_CASE("generated density matrices satisfy the state invariants") {
  auto gen = rng::engine(31);
  for (int rep = 0; rep < 25; ++rep) {
    int d = 2 + rep % 3;
    DensityMatrix rho = testutil::random_mixed(d, gen);
    const Matrix& m = rho.entries();
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(m.trace().real() - 1.0) < 1e-10);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
    CHECK_NOTHROW(DensityMatrix::validated(Dim(d), m));
    // Tracing out either side leaves a unit-trace reduced state.
    CHECK(partial_trace(rho, Side::A).trace().real() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("DensityMatrix validation names the violated invariant") {
  Matrix bad = Matrix::Zero(4, 4);
  bad(0, 1) = Cplx(0.5, 0.2);  // not Hermitian
  bad(0, 0) = 1.0;
  CHECK_THROWS_WITH_AS(DensityMatrix::validated(Dim(2), bad),
                       doctest::Contains("Hermitian"), std::invalid_argument);

  Matrix off = Matrix::Identity(4, 4);  // trace 4
  CHECK_THROWS_WITH_AS(DensityMatrix::validated(Dim(2), off),
                       doctest::Contains("trace"), std::invalid_argument);

  Matrix neg = Matrix::Identity(4, 4) / 2.0;
  neg(3, 3) = -0.5;
  CHECK_THROWS_WITH_AS(DensityMatrix::validated(Dim(2), neg),
                       doctest::Contains("eigenvalue"), std::invalid_argument);
}
