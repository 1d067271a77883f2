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

#include "gconc/axisym.hpp"
#include "gconc/io.hpp"
#include "gconc/oracles.hpp"
#include "gconc/pure.hpp"
#include "gconc/slopt.hpp"
#include "gconc/witness.hpp"
#include "test_util.hpp"

using namespace gconc;

namespace {

// Random pure state with all Schmidt coefficients bounded away from zero.
PureState random_full_rank_pure(int d, std::mt19937_64& gen) {
  for (;;) {
    PureState psi = testutil::random_pure(d, gen);
    SchmidtSpectrum sp = schmidt(psi);
    if (sp[d - 1] > 0.05) return psi;
  }
}

}  // namespace

TEST_CASE("marginal_filter has unit determinant") {
  auto gen = rng::engine(401);
  for (int d = 2; d <= 5; ++d) {
    Matrix x = rng::gaussian_matrix(d, d, gen);
    Matrix m = x * x.adjoint() + 0.1 * Matrix::Identity(d, d);
    Matrix f = slopt::marginal_filter(m, d);
    CHECK(std::abs(f.determinant()) == doctest::Approx(1.0).epsilon(1e-10));
    // Filtering flattens the marginal: f m f^dag is proportional to identity.
    Matrix flat = f * m * f.adjoint();
    double tr = flat.trace().real();
    CHECK((flat - tr / d * Matrix::Identity(d, d)).norm() < 1e-9 * tr);
  }
}

TEST_CASE("normal form of a maximally entangled state is immediate") {
  for (int d = 2; d <= 4; ++d) {
    slopt::NormalFormResult nf = slopt::normal_form(dm_from_pure(max_entangled(Dim(d))));
    CHECK(nf.converged);
    CHECK(!nf.vanished);
    CHECK(nf.iterations <= 1);
    CHECK(nf.trace_factor == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("normal form of a full-rank pure state carries its G-concurrence") {
  auto gen = rng::engine(403);
  for (int rep = 0; rep < 25; ++rep) {
    int d = 2 + rep % 3;
    PureState psi = random_full_rank_pure(d, gen);
    slopt::NormalFormResult nf = slopt::normal_form(dm_from_pure(psi));
    CHECK(nf.converged);
    CHECK(!nf.vanished);
    CHECK(nf.trace_factor == doctest::Approx(pure::cg_pure(psi)).epsilon(1e-8));
    // Marginals of the normalized result are maximally mixed.
    DensityMatrix tau = nf.tau.normalized();
    CHECK((partial_trace(tau, Side::A) - Matrix::Identity(d, d) / d).norm() < 1e-8);
    CHECK((partial_trace(tau, Side::B) - Matrix::Identity(d, d) / d).norm() < 1e-8);
  }
}

TEST_CASE("normal form agrees with the explicit diagonal filter on pure states") {
  auto gen = rng::engine(407);
  const int d = 3;
  PureState psi = random_full_rank_pure(d, gen);

  // Build the closed-form unit-determinant filters from the SVD.
  Eigen::JacobiSVD<Matrix> svd(psi.amplitudes(),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  RVector sv = svd.singularValues();
  double prod = 1.0;
  for (int i = 0; i < d; ++i) prod *= sv[i];
  RVector diag(d);
  for (int i = 0; i < d; ++i) {
    diag[i] = std::sqrt(std::pow(prod, 1.0 / d) / sv[i]);
  }
  Matrix fa = svd.matrixU() * diag.asDiagonal() * svd.matrixU().adjoint();
  Matrix fb = svd.matrixV().conjugate() * diag.asDiagonal() *
              svd.matrixV().transpose();
  UnnormalizedState filtered = apply_local(dm_from_pure(psi), fa, fb);
  CHECK(filtered.trace() == doctest::Approx(pure::cg_pure(psi)).epsilon(1e-10));

  slopt::NormalFormResult nf = slopt::normal_form(dm_from_pure(psi));
  CHECK(nf.trace_factor == doctest::Approx(filtered.trace()).epsilon(1e-8));
}

TEST_CASE("normal form vanishes on rank-deficient pure states") {
  Matrix c = Matrix::Zero(3, 3);
  c(0, 0) = std::sqrt(0.7);
  c(1, 1) = std::sqrt(0.3);
  slopt::NormalFormResult nf = slopt::normal_form(dm_from_pure(PureState(Dim(3), c)));
  CHECK(nf.vanished);
}

TEST_CASE("normal form trace history is nonincreasing") {
  auto gen = rng::engine(409);
  for (int rep = 0; rep < 10; ++rep) {
    int d = 2 + rep % 3;
    slopt::NormalFormResult nf = slopt::normal_form(testutil::random_mixed(d, gen));
    for (std::size_t i = 1; i < nf.trace_history.size(); ++i) {
      CHECK(nf.trace_history[i] <= nf.trace_history[i - 1] + 1e-12);
    }
  }
}

TEST_CASE("a single filtering step preserves the carried G-concurrence") {
  auto gen = rng::engine(419);
  const int d = 3;
  PureState psi = random_full_rank_pure(d, gen);
  DensityMatrix rho = dm_from_pure(psi);
  Matrix ma = partial_trace(rho, Side::A);
  Matrix f = slopt::marginal_filter(ma, d);
  UnnormalizedState stepped = apply_local(rho, f, Matrix::Identity(d, d));
  double t = stepped.trace();
  // The normalized amplitude matrix of the stepped pure state.
  Eigen::SelfAdjointEigenSolver<Matrix> es(stepped.entries());
  CVector top = es.eigenvectors().col(d * d - 1) *
                std::sqrt(es.eigenvalues()(d * d - 1) / t);
  Matrix c2(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) c2(j, k) = top[composite_index(j, k, d)];
  }
  c2 /= c2.norm();
  CHECK(t * pure::cg_pure(PureState(Dim(d), c2)) ==
        doctest::Approx(pure::cg_pure(psi)).epsilon(1e-8));
}

TEST_CASE("maximize_fef recovers local-unitary rotations of Phi") {
  auto gen = rng::engine(421);
  for (int rep = 0; rep < 12; ++rep) {
    int d = 3 + rep % 2;
    Matrix ua = rng::haar_unitary(d, gen);
    Matrix ub = rng::haar_unitary(d, gen);
    DensityMatrix rho = conjugate_unitary(dm_from_pure(max_entangled(Dim(d))), ua, ub);
    slopt::FefResult fef = slopt::maximize_fef(rho, 20, 1000 + rep);
    CHECK(fef.f_max >= 1.0 - 1e-6);
    // Rotating by the reported unitary reproduces the reported fidelity.
    CHECK(fidelity_phi(slopt::rotate_to_phi(rho, fef.correlation_unitary)) ==
          doctest::Approx(fef.f_max).epsilon(1e-10));
    // W is unitary.
    CHECK((fef.correlation_unitary * fef.correlation_unitary.adjoint() -
           Matrix::Identity(d, d))
              .norm() < 1e-9);
  }
}

TEST_CASE("maximize_fef on the maximally mixed state is flat") {
  const int d = 3;
  Matrix mixed = Matrix::Identity(d * d, d * d) / (d * d);
  slopt::FefResult fef =
      slopt::maximize_fef(DensityMatrix::trusted(Dim(d), mixed), 4, 3);
  CHECK(fef.f_max == doctest::Approx(1.0 / (d * d)).epsilon(1e-10));
}

TEST_CASE("maximize_fef never falls below the plain fidelity") {
  auto gen = rng::engine(431);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 2 + rep % 3;
    DensityMatrix rho = testutil::random_mixed(d, gen);
    slopt::FefResult fef = slopt::maximize_fef(rho, 5, rep);
    CHECK(fef.f_max >= fidelity_phi(rho) - 1e-12);
  }
}

TEST_CASE("best_bound is tight on maximally entangled states") {
  for (int d = 2; d <= 6; ++d) {
    slopt::BoundConfig config;
    config.use_nf = true;
    config.use_lu = true;
    config.use_phases = true;
    config.restarts = 4;
    BoundReport rep = slopt::best_bound(dm_from_pure(max_entangled(Dim(d))), config);
    CHECK(rep.final_bound == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("best_bound on the d=3 isotropic state at p=0.7") {
  DensityMatrix rho = witness::isotropic_state(Dim(3), 0.7);
  slopt::BoundConfig config;  // no optimization stages
  BoundReport rep = slopt::best_bound(rho, config);
  CHECK(rep.axisym_bound == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(rep.final_bound == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("the full pipeline is exact on full-rank pure states") {
  auto gen = rng::engine(433);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 3 + rep % 2;
    PureState psi = random_full_rank_pure(d, gen);
    slopt::BoundConfig config;
    config.use_nf = true;
    config.use_lu = true;
    config.restarts = 8;
    config.seed = 50 + rep;
    BoundReport rep_out = slopt::best_bound(dm_from_pure(psi), config);
    CHECK(rep_out.final_bound == doctest::Approx(pure::cg_pure(psi)).epsilon(1e-6));
  }
}

TEST_CASE("pipeline reports vanished normal forms as exact zeros") {
  Matrix c = Matrix::Zero(3, 3);
  c(0, 0) = std::sqrt(0.6);
  c(1, 1) = std::sqrt(0.4);
  slopt::BoundConfig config;
  config.use_nf = true;
  BoundReport rep = slopt::best_bound(dm_from_pure(PureState(Dim(3), c)), config);
  CHECK(rep.nf_vanished);
  CHECK(rep.final_bound == 0.0);
}

TEST_CASE("final bound dominates every aggregated bound") {
  auto gen = rng::engine(439);
  for (int rep = 0; rep < 15; ++rep) {
    DensityMatrix rho = testutil::random_mixed(3, gen);
    slopt::BoundConfig config;
    config.use_nf = true;
    config.use_lu = true;
    config.use_phases = true;
    config.restarts = 3;
    config.seed = rep;
    BoundReport out = slopt::best_bound(rho, config);
    CHECK(out.final_bound >= out.axisym_bound - 1e-15);
    if (out.witness_bound) {
      CHECK(out.final_bound >= *out.witness_bound - 1e-15);
    }
    CHECK(out.final_bound >= 0.0);
  }
}

TEST_CASE("best_bound stays below the convex-roof upper estimate") {
  auto gen = rng::engine(443);
  for (int rep = 0; rep < 15; ++rep) {
    DensityMatrix rho = testutil::random_mixed(3, gen);
    slopt::BoundConfig config;
    config.use_nf = true;
    config.use_lu = true;
    config.use_phases = true;
    config.restarts = 3;
    config.seed = rep;
    BoundReport out = slopt::best_bound(rho, config);
    double upper = oracles::convex_roof_upper(rho, 3, 7 * rep + 1).value;
    CHECK(out.final_bound <= upper + 1e-6);
  }
}

TEST_CASE("identical configuration reproduces the report bit for bit") {
  auto gen = rng::engine(449);
  DensityMatrix rho = testutil::random_mixed(3, gen);
  slopt::BoundConfig config;
  config.use_nf = true;
  config.use_lu = true;
  config.use_phases = true;
  config.restarts = 6;
  config.seed = 12345;
  BoundReport a = slopt::best_bound(rho, config);
  BoundReport b = slopt::best_bound(rho, config);
  a.input_digest = b.input_digest = "x";
  CHECK(io::report_to_json(a, false) == io::report_to_json(b, false));
}
