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

#pragma once

#include <optional>
#include <vector>

#include "driqs/dynamics.hpp"
#include "driqs/liouvillian.hpp"
#include "driqs/reservoir.hpp"

namespace driqs {

/// Closed-form steady state of the fixed-dissipator master equation,
/// including the e^{-i phi} phase on the coherence. Regular at
/// gamma_fd = 0 (the weak-dissipation limit commutes with H_S).
QubitState fd_steady_analytic(const ControlField& field, double gamma_fd,
                              double n_fd);

/// Closed-form steady state of the secular microscopic master equation:
/// the dressed-basis mixture weighted by the secular rates, rotated to the
/// bare basis and phase-restored. Throws ZeroTotalRate when both dressed
/// decay rates vanish.
QubitState mme_secular_steady_analytic(const DressedBasis& basis,
                                       const RateSet& rates, double phi);

/// Secular steady state under the uniform-occupation approximation,
/// parameterized by the raw sideband rates.
QubitState secular_steady_uniform(const DressedBasis& basis,
                                  double gamma_minus, double gamma_plus,
                                  double n_fd, double phi);

/// D^fd(rho) for the undriven dissipator with the given rate and occupation.
Mat2 fd_dissipator_action(const QubitState& rho, double gamma_fd, double n_fd);

/// |Tr{rho D^fd(rho)}|; zero iff rho is compatible with some fixed-dissipator
/// steady state (for a qubit this is the only purity condition).
double fd_purity_residual(const QubitState& rho, double gamma_fd, double n_fd);

/// Reconstruct the control Hamiltonian that makes rho_target stationary
/// under the fixed dissipator: H = sum_{a != b} i <a|D(rho)|b> /
/// (lambda_a - lambda_b) |a><b| in the target's eigenbasis. Throws
/// DegenerateSpectrum or IncompatibleTarget.
Mat2 control_for_target(const QubitState& rho_target, double gamma_fd,
                        double n_fd, double spectrum_tol = 1e-8,
                        double purity_tol = 1e-8);

/// Occupation n_fd(x) for which the uniform-occupation structured steady
/// state lands back on the zero-temperature flat-spectrum ellipsoid.
/// Defined for 0 <= x <= 1 away from theta = pi/2.
double thermal_compensation(double x, const DressedBasis& basis);

/// |2(rx^2+ry^2) + (2rz+1)^2 - 1|, the defect from the weak-dissipation
/// steady-state ellipsoid at zero temperature.
double ellipsoid_residual(const BlochVector& r);

/// Fixed-ratio rate model used where no spectral density is specified.
struct FixedX {
  double x = 1.0;
  double gamma0 = 1e-3;
  double n_fd = 0.0;
};

struct SweepConfig {
  GeneratorKind kind = GeneratorKind::Fdme;
  double delta = 1.0;
  double omega0 = 1e4;
  std::vector<double> thetas;       // in (0, pi/2); Omega/delta = tan(theta)
  std::vector<double> phis{0.0, M_PI};
  Thermal thermal{0.0};
  std::optional<double> n_fd;       // force uniform occupations
  bool uniform_occupation = false;
  bool include_lamb = true;
  std::optional<double> gamma_fd;   // FDME rate; absent = negligible (0)
  std::optional<SpectralDensity> spectral;
  std::optional<FixedX> fixed_x;
  PvSettings pv;
  double degeneracy_tol = 1e-8;
};

struct SweepPoint {
  double theta = 0.0;
  double omega_over_delta = 0.0;
  double phi = 0.0;
  double x_ratio = 1.0;  // gamma_- / gamma_+ actually used
  BlochVector r;
  double residual = 0.0;
  double ellipsoid_defect = 0.0;
  double fidelity_vs_fd = 1.0;  // against the gamma_fd -> 0 reference
  bool physical = true;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepPoint> points;
};

/// Steady-state family over a (theta, phi) grid for the requested generator;
/// the Fig.-style ellipsoid/deformation curves as data.
SweepResult ellipsoid_sweep(const SweepConfig& config);

std::vector<double> theta_grid_uniform(std::size_t n);
std::vector<double> theta_grid_from_omega(const std::vector<double>& omega_over_delta);

struct FidelityMapConfig {
  std::vector<double> omega_over_delta;  // default logspace(0.1, 100, 200)
  std::vector<double> log10_x;           // default linspace(-2, 2, 81)
  double delta = 1.0;
  double n_fd = 0.0;
  double phi = M_PI;
};

struct FidelityMap {
  FidelityMapConfig config;
  /// Row-major: value[ix * n_omega + iw] for (log10_x[ix], omega[iw]).
  std::vector<double> value;

  double at(std::size_t ix, std::size_t iw) const {
    return value[ix * config.omega_over_delta.size() + iw];
  }
};

/// Fidelity between the weak-dissipation FDME steady state and the secular
/// microscopic one at fixed ratio x, over a control-field grid.
FidelityMap fidelity_map(const FidelityMapConfig& config);

/// Compensation curve n_fd(x) over a control grid, with the defect of the
/// compensated state from the zero-temperature flat-spectrum state.
struct CompensationPoint {
  double omega_over_delta = 0.0;
  double n_fd = 0.0;
  double defect = 0.0;  // Bloch distance to the x = 1, n = 0 state
};

std::vector<CompensationPoint> compensation_curve(
    double x, const std::vector<double>& omega_over_delta, double delta = 1.0,
    double phi = M_PI);

}  // namespace driqs
