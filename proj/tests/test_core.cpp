// Copyright 2026 The driqs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "driqs/core.hpp"
#include "testutil.hpp"

using namespace driqs;

TEST_CASE("dressed basis: undriven and symmetric limits") {
  const DressedBasis undriven = dressed_basis(1.0, 0.0);
  CHECK(undriven.nu == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(undriven.theta == 0.0);
  CHECK(undriven.c == 1.0);
  CHECK(undriven.s == 0.0);

  const DressedBasis symmetric = dressed_basis(0.0, 2.0);
  CHECK(symmetric.nu == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(symmetric.theta == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(symmetric.c == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(symmetric.s == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const DressedBasis inverted = dressed_basis(-1.0, 0.0);
  CHECK(inverted.theta == doctest::Approx(M_PI).epsilon(1e-15));

  CHECK_THROWS_AS(dressed_basis(0.0, 0.0), DegenerateHamiltonian);
}

TEST_CASE("dressed basis: generic point against the arctan form") {
  // delta = 1, omega = sqrt(2): nu = sqrt(3), cos(theta) = 1/sqrt(3).
  const DressedBasis b = dressed_basis(1.0, std::sqrt(2.0));
  CHECK(b.nu == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(b.theta == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-14));
  CHECK(b.theta == doctest::Approx(0.9553166181245093).epsilon(1e-12));
  CHECK(b.c * b.c == doctest::Approx(0.7886751345948129).epsilon(1e-12));
  CHECK(b.s * b.s == doctest::Approx(0.2113248654051871).epsilon(1e-12));
}

TEST_CASE("dressed basis diagonalizes H_S (property)") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 1000; ++trial) {
    const double delta = test::uniform(rng, -3.0, 3.0);
    const double omega = test::uniform(rng, 1e-6, 5.0);
    const DressedBasis b = dressed_basis(delta, omega);

    CHECK(b.c * b.c + b.s * b.s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.nu * std::cos(b.theta) == doctest::Approx(delta).epsilon(1e-12));
    CHECK(b.nu * std::sin(b.theta) == doctest::Approx(omega).epsilon(1e-12));

    const Mat2 h = 0.5 * delta * sigma_z() + 0.5 * omega * sigma_x();
    Eigen::SelfAdjointEigenSolver<Mat2> es(h);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-0.5 * b.nu).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == doctest::Approx(0.5 * b.nu).epsilon(1e-12));

    const Vec2 plus = phi_plus(b);
    CHECK((h * plus - 0.5 * b.nu * plus).norm() < 1e-12 * std::max(1.0, b.nu));
    const Vec2 minus = phi_minus(b);
    CHECK((h * minus + 0.5 * b.nu * minus).norm() < 1e-12 * std::max(1.0, b.nu));
  }
}

TEST_CASE("eigenoperator decomposition coefficients") {
  const EigenoperatorTable t0 = eigenoperator_decomposition(dressed_basis(1.0, 0.0));
  CHECK(t0.c2 == 1.0);
  CHECK(t0.ms2 == 0.0);
  CHECK(t0.sc == 0.0);

  const EigenoperatorTable t1 = eigenoperator_decomposition(dressed_basis(0.0, 1.0));
  CHECK(t1.c2 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t1.ms2 == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(t1.sc == doctest::Approx(0.5).epsilon(1e-15));

  const EigenoperatorTable t2 =
      eigenoperator_decomposition(dressed_basis(1.0, std::sqrt(2.0)));
  CHECK(t2.c2 == doctest::Approx(0.78867513459481287).epsilon(1e-12));
  CHECK(t2.ms2 == doctest::Approx(-0.21132486540518713).epsilon(1e-12));
  CHECK(t2.sc == doctest::Approx(0.40824829046386302).epsilon(1e-12));
}

TEST_CASE("eigenoperator table reconstructs the bare operators (property)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const double delta = test::uniform(rng, -2.0, 2.0);
    const double omega = test::uniform(rng, 1e-9, 4.0);
    const DressedBasis b = dressed_basis(delta, omega);
    const EigenoperatorTable t = eigenoperator_decomposition(b);
    CHECK((reconstruct_sigma_plus(t, b) - sigma_plus()).cwiseAbs().maxCoeff() <
          1e-14);
    CHECK((reconstruct_sigma_z(t, b) - sigma_z()).cwiseAbs().maxCoeff() < 1e-14);
    const Mat2 sx = reconstruct_sigma_plus(t, b) +
                    reconstruct_sigma_plus(t, b).adjoint().eval();
    CHECK((sx - sigma_x()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("bloch vector basics") {
  const BlochVector g = bloch(QubitState::ground());
  CHECK(g.rx == 0.0);
  CHECK(g.ry == 0.0);
  CHECK(g.rz == -1.0);

  const BlochVector mixed = bloch(QubitState::maximally_mixed());
  CHECK(mixed.norm() == 0.0);

  // rho_ee = 0.21541, rho_eg = 0.40240 -> r = (0.80480, 0, -0.56918).
  Mat2 m;
  m << 0.21541, 0.40240, 0.40240, 0.78459;
  const BlochVector r = bloch(QubitState(m));
  CHECK(r.rx == doctest::Approx(0.80480).epsilon(1e-12));
  CHECK(r.ry == 0.0);
  CHECK(r.rz == doctest::Approx(-0.56918).epsilon(1e-12));
}

TEST_CASE("bloch round trip and purity norm (property)") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const QubitState rho = test::random_density(rng);
    const QubitState back = from_bloch(bloch(rho));
    CHECK((back.rho() - rho.rho()).cwiseAbs().maxCoeff() < 1e-14);
    const double norm = bloch(rho).norm();
    CHECK(norm == doctest::Approx(std::sqrt(2.0 * rho.purity() - 1.0))
                      .epsilon(1e-12));
    CHECK(norm <= 1.0 + 1e-10);
  }
}

TEST_CASE("fidelity: fixed values") {
  const QubitState g = QubitState::ground();
  const QubitState e = QubitState::excited();
  CHECK(fidelity(g, g) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(e, g) == doctest::Approx(0.0).epsilon(1e-14));

  Vec2 plus;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(fidelity(QubitState::pure(plus), QubitState::maximally_mixed()) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("fidelity: algebraic oracle, symmetry, unitary invariance") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const QubitState a = test::random_density(rng);
    const QubitState b = test::random_density(rng);
    const double f = fidelity(a, b);

    // 2x2 closed form: F = Tr(rho sigma) + 2 sqrt(det rho det sigma).
    const double closed =
        (a.rho() * b.rho()).trace().real() +
        2.0 * std::sqrt(std::max(0.0, a.rho().determinant().real() *
                                          b.rho().determinant().real()));
    CHECK(f == doctest::Approx(closed).epsilon(1e-10));
    CHECK(f == doctest::Approx(fidelity(b, a)).epsilon(1e-12));
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);

    const Mat2 u = test::random_unitary(rng);
    const QubitState ua(u * a.rho() * u.adjoint());
    const QubitState ub(u * b.rho() * u.adjoint());
    CHECK(fidelity(ua, ub) == doctest::Approx(f).epsilon(1e-10));

    // Pure-state reduction: F(|psi><psi|, sigma) = <psi|sigma|psi>.
    const Vec2 psi = test::random_ket(rng);
    const QubitState p = QubitState::pure(psi);
    const double overlap = (psi.adjoint() * b.rho() * psi)(0, 0).real();
    CHECK(fidelity(p, b) == doctest::Approx(overlap).epsilon(1e-10));
  }
}

TEST_CASE("fidelity rejects clearly non-physical states") {
  Mat2 bad;
  bad << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(fidelity(QubitState(bad), QubitState::ground()),
                  NonPhysicalState);
}

TEST_CASE("control field validation and RWA flag") {
  const ControlField f = ControlField::from_omega0(1.0, 2.0, M_PI, 1e4);
  CHECK(f.omega_L == doctest::Approx(9999.0));
  CHECK(f.rwa_ok());
  CHECK_FALSE(ControlField::from_omega0(1.0, 200.0, 0.0, 1e4).rwa_ok());
  CHECK_THROWS_AS(ControlField::from_omega0(1.0, -1.0, 0.0, 1e4), ConfigError);
  CHECK_THROWS_AS(ControlField::from_omega0(2e4, 1.0, 0.0, 1e4), ConfigError);
}
