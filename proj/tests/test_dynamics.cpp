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
#include <sstream>
#include <unsupported/Eigen/MatrixFunctions>

#include "driqs/analysis.hpp"
#include "driqs/dynamics.hpp"
#include "driqs/io.hpp"
#include "testutil.hpp"

using namespace driqs;

TEST_CASE("evolve: zero generator keeps the state constant") {
  Liouvillian zero;
  std::mt19937_64 rng(5);
  const QubitState rho0 = QubitState::pure(test::random_ket(rng));
  const Trajectory t = evolve(zero, rho0, linspace(0.0, 10.0, 11));
  for (const auto& s : t.states)
    CHECK((s.rho() - rho0.rho()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("evolve: exponential decay law") {
  const double gamma = 0.2;
  const ControlField f = ControlField::from_omega0(1.0, 0.0, 0.0, 1e3);
  const Liouvillian gen = build_fdme(f, gamma, 0.0);
  const Trajectory t =
      evolve(gen, QubitState::excited(), linspace(0.0, 30.0, 61));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double expected = std::exp(-gamma * t.times[i]);
    CHECK(t.states[i].rho_ee().real() ==
          doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("evolve agrees with the matrix exponential (property)") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const double delta = test::uniform(rng, 0.3, 1.5);
    const double omega = test::uniform(rng, 0.1, 3.0);
    const double phi = test::uniform(rng, 0.0, 2 * M_PI);
    const ControlField f = ControlField::from_omega0(delta, omega, phi, 1e3);
    const DressedBasis b = dressed_basis(f);
    const RateSet rates = rate_set_from_sidebands(
        fixed_x_sidebands(test::uniform(rng, 0.1, 10.0),
                          test::uniform(rng, 0.01, 0.1),
                          test::uniform(rng, 0.0, 1.0)),
        b);
    const Liouvillian gen = (trial % 2) ? build_mme_secular(f, b, rates)
                                        : build_mme_nonsecular(f, b, rates);
    const QubitState rho0 = test::random_density(rng);

    std::vector<double> grid{0.0};
    for (int k = 0; k < 10; ++k)
      grid.push_back(grid.back() + test::uniform(rng, 0.3, 3.0));
    const Trajectory t = evolve(gen, rho0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Mat4 prop = (gen.matrix * grid[i]).exp();
      const Vec4 expected = prop * vectorize(rho0.rho());
      const Vec4 got = vectorize(t.states[i].rho());
      CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("evolve: trace stays put over a million rate units") {
  const ControlField f = ControlField::from_omega0(0.0, 0.0, 0.0, 1e3);
  const Liouvillian gen = build_fdme(f, 1.0, 0.3);
  const Trajectory t =
      evolve(gen, QubitState::ground(), logspace(1e-2, 1e6, 25));
  for (const auto& s : t.states)
    CHECK(std::abs(s.rho().trace() - 1.0) < 1e-9);

  // Driven case over a long (but affordable) horizon.
  const ControlField fd = ControlField::from_omega0(1.0, std::sqrt(2.0), M_PI, 1e3);
  const Liouvillian gd = build_fdme(fd, 1e-3, 0.0);
  const Trajectory td =
      evolve(gd, QubitState::ground(), {0.0, 5e3, 2e4});
  for (const auto& s : td.states)
    CHECK(std::abs(s.rho().trace() - 1.0) < 1e-9);
}

TEST_CASE("evolve rejects bad grids and collapsing tolerances") {
  Liouvillian zero;
  CHECK_THROWS_AS(evolve(zero, QubitState::ground(), {}), ConfigError);
  CHECK_THROWS_AS(evolve(zero, QubitState::ground(), {0.0, 1.0, 0.5}),
                  ConfigError);
  CHECK_THROWS_AS(evolve(zero, QubitState::ground(), {-1.0, 1.0}), ConfigError);

  const ControlField f = ControlField::from_omega0(1.0, 2.0, 0.0, 1e3);
  const Liouvillian gen = build_fdme(f, 0.1, 0.0);
  EvolveOptions impossible;
  impossible.rel_tol = 1e-30;
  impossible.abs_tol = 1e-30;
  CHECK_THROWS_AS(
      evolve(gen, QubitState::ground(), {0.0, 10.0}, impossible),
      StepSizeUnderflow);
}

TEST_CASE("steady_state: pure decay and residuals") {
  const ControlField f = ControlField::from_omega0(1.0, 0.0, 0.0, 1e3);
  const SteadyState ss = steady_state(build_fdme(f, 0.08, 0.0));
  CHECK((ss.state.rho() - QubitState::ground().rho()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(ss.residual < 1e-12);
  CHECK(ss.physical);
}

TEST_CASE("steady_state matches the analytic secular state (spot checks)") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    const double delta = test::uniform(rng, 0.4, 1.6);
    const double omega = test::uniform(rng, 0.2, 3.0);
    const double phi = test::uniform(rng, 0.0, 2 * M_PI);
    const ControlField f = ControlField::from_omega0(delta, omega, phi, 1e3);
    const DressedBasis b = dressed_basis(f);
    const RateSet rates = rate_set_from_sidebands(
        fixed_x_sidebands(test::uniform(rng, 0.05, 5.0),
                          test::uniform(rng, 0.005, 0.08),
                          test::uniform(rng, 0.0, 2.0)),
        b);
    const SteadyState ss = steady_state(build_mme_secular(f, b, rates));
    const QubitState analytic = mme_secular_steady_analytic(b, rates, phi);
    CHECK((ss.state.rho() - analytic.rho()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("steady_state equals the long-time integration endpoint") {
  std::mt19937_64 rng(654);
  for (int trial = 0; trial < 10; ++trial) {
    const double delta = test::uniform(rng, 0.5, 1.5);
    const double omega = test::uniform(rng, 0.3, 2.5);
    const ControlField f = ControlField::from_omega0(delta, omega, 0.0, 1e3);
    const DressedBasis b = dressed_basis(f);
    const RateSet rates = rate_set_from_sidebands(
        fixed_x_sidebands(test::uniform(rng, 0.2, 5.0), 0.05), b);
    const Liouvillian gen = build_mme_secular(f, b, rates);
    const SteadyState ss = steady_state(gen);
    const double tmax = 20.0 * relaxation_time(gen);
    const Trajectory t = evolve(gen, QubitState::ground(), {0.0, tmax});
    CHECK((vectorize(t.states.back().rho()) - vectorize(ss.state.rho()))
              .cwiseAbs()
              .maxCoeff() < 1e-4);
  }
}

TEST_CASE("relaxation_time: analytic anchors") {
  const ControlField f = ControlField::from_omega0(1.0, 0.0, 0.0, 1e3);
  const double gamma = 0.45;
  // T = 0, undriven: populations decay at gamma, coherences at gamma/2.
  CHECK(relaxation_time(build_fdme(f, gamma, 0.0)) ==
        doctest::Approx(2.0 / gamma).epsilon(1e-10));

  // Flat spectrum at theta = pi/2, T = 0: population gap (g_+ + g_-)/4 * 2.
  const ControlField fr = ControlField::from_omega0(0.0, 2.0, 0.0, 1e3);
  const DressedBasis br = dressed_basis(fr);
  Sidebands sb;
  sb.gamma_plus = sb.gamma_minus = sb.gamma_zero = gamma;
  const RateSet rates = rate_set_from_sidebands(sb, br);
  CHECK(relaxation_time(build_mme_secular(fr, br, rates)) ==
        doctest::Approx(2.0 / gamma).epsilon(1e-10));

  CHECK_THROWS_AS(relaxation_time(Liouvillian{}), NoGap);
}

TEST_CASE("trajectory CSV export shape") {
  const ControlField f = ControlField::from_omega0(1.0, 1.0, 0.0, 1e3);
  const Liouvillian gen = build_fdme(f, 0.1, 0.0);
  const Trajectory t = evolve(gen, QubitState::ground(), linspace(0.0, 5.0, 6));
  std::ostringstream os;
  write_trajectory_csv(os, t);
  const std::string s = os.str();
  CHECK(s.rfind("t,rx,ry,rz,rho_ee_re,rho_eg_re,rho_eg_im,physical\r\n", 0) ==
        0);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = s.find("\r\n", pos)) != std::string::npos;
       ++pos)
    ++rows;
  CHECK(rows == 7);  // header + 6 samples
}
