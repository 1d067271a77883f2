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

#include "gconc/oracles.hpp"
#include "gconc/pure.hpp"
#include "test_util.hpp"

using namespace gconc;

TEST_CASE("cg_pure is 1 on maximally entangled states") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(pure::cg_pure(max_entangled(Dim(d))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("cg_pure vanishes on rank-deficient states") {
  Matrix c = Matrix::Zero(3, 3);
  c(0, 0) = std::sqrt(0.5);
  c(1, 1) = std::sqrt(0.5);
  CHECK(pure::cg_pure(PureState(Dim(3), c)) == doctest::Approx(0.0));
}

TEST_CASE("cg_pure matches the two-coefficient example") {
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = std::sqrt(0.8);
  c(1, 1) = std::sqrt(0.2);
  CHECK(pure::cg_pure(PureState(Dim(2), c)) ==
        doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("singular-value and determinant routes agree") {
  auto gen = rng::engine(101);
  for (int rep = 0; rep < 100; ++rep) {
    int d = 2 + rep % 5;  // up to 6
    PureState psi = testutil::random_pure(d, gen);
    CHECK(std::abs(pure::cg_pure(psi) - pure::cg_pure_det(psi)) < 1e-9);
  }
}

TEST_CASE("cg_pure is invariant under local unitaries") {
  auto gen = rng::engine(103);
  for (int rep = 0; rep < 30; ++rep) {
    int d = 2 + rep % 3;
    PureState psi = testutil::random_pure(d, gen);
    Matrix ua = rng::haar_unitary(d, gen);
    Matrix ub = rng::haar_unitary(d, gen);
    PureState rot(Dim(d), ua * psi.amplitudes() * ub.transpose());
    CHECK(std::abs(pure::cg_pure(psi) - pure::cg_pure(rot)) < 1e-9);
  }
}

TEST_CASE("c2_pure canonical values") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(pure::c2_pure(max_entangled(Dim(d))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  Matrix c = Matrix::Zero(3, 3);
  c(0, 0) = 1;  // product state
  CHECK(pure::c2_pure(PureState(Dim(3), c)) == doctest::Approx(0.0));

  Matrix two = Matrix::Zero(2, 2);
  two(0, 0) = std::sqrt(0.8);
  two(1, 1) = std::sqrt(0.2);
  CHECK(pure::c2_pure(PureState(Dim(2), two)) ==
        doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("cg_pure_lower canonical values") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(pure::cg_pure_lower(max_entangled(Dim(d))) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  Matrix c = Matrix::Zero(3, 3);
  c(0, 0) = 1;
  CHECK(pure::cg_pure_lower(PureState(Dim(3), c)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("cg_pure_lower never exceeds cg_pure") {
  auto gen = rng::engine(107);
  for (int rep = 0; rep < 400; ++rep) {
    int d = 3 + rep % 2;
    PureState psi = testutil::random_pure(d, gen);
    CHECK(pure::cg_pure_lower(psi) <= pure::cg_pure(psi) + 1e-9);
  }
}

TEST_CASE("cg_of_F endpoints") {
  for (int d = 2; d <= 6; ++d) {
    pure::PureCurvePoint top = pure::cg_of_F(Dim(d), 1.0);
    CHECK(top.alpha == doctest::Approx(1.0 / std::sqrt(double(d))).epsilon(1e-12));
    CHECK(top.beta == doctest::Approx(1.0 / std::sqrt(double(d))).epsilon(1e-12));
    CHECK(top.cg == doctest::Approx(1.0).epsilon(1e-12));

    pure::PureCurvePoint bottom =
        pure::cg_of_F(Dim(d), double(d - 1) / d);
    CHECK(bottom.alpha == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bottom.cg == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(pure::cg_of_F(Dim(3), 0.5), std::domain_error);
  CHECK_THROWS_AS(pure::cg_of_F(Dim(3), 1.1), std::domain_error);
}

TEST_CASE("cg_of_F agrees with the constrained minimizer at d=4, F=0.9") {
  double closed = pure::cg_of_F(Dim(4), 0.9).cg;
  double numeric = oracles::constrained_cg_min(Dim(4), 0.9, 12, 42);
  CHECK(std::abs(closed - numeric) < 1e-6);
}

TEST_CASE("cg_of_F is concave: centered second differences stay small") {
  for (int d = 3; d <= 5; ++d) {
    const double lo = double(d - 1) / d;
    const int n = 1000;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
      double F = lo + (1.0 - lo) * i / (n - 1);
      vals[i] = pure::cg_of_F(Dim(d), F).cg;
    }
    for (int i = 1; i + 1 < n; ++i) {
      double second = vals[i - 1] - 2 * vals[i] + vals[i + 1];
      CHECK(second <= 1e-8);
    }
  }
}

TEST_CASE("cg_of_F lies above its chord and meets it at the endpoints") {
  for (int d = 3; d <= 5; ++d) {
    const double lo = double(d - 1) / d;
    auto chord = [&](double F) { return 1.0 - d * (1.0 - F); };
    CHECK(pure::cg_of_F(Dim(d), lo).cg == doctest::Approx(chord(lo)).epsilon(1e-10));
    CHECK(pure::cg_of_F(Dim(d), 1.0).cg == doctest::Approx(chord(1.0)).epsilon(1e-10));
    for (int i = 0; i <= 100; ++i) {
      double F = lo + (1.0 - lo) * i / 100.0;
      CHECK(pure::cg_of_F(Dim(d), F).cg >= chord(F) - 1e-10);
    }
  }
}
