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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "driqs/core.hpp"
#include "driqs/errors.hpp"

namespace driqs {

/// Bath spectral density J(omega), defined for omega > 0.
///   Flat:       J(omega) = level
///   Lorentzian: J(omega) = gamma_l/(2 pi) * lambda^2/((omega_c-omega)^2+lambda^2)
///   Tabulated:  monotone piecewise-cubic interpolation of samples,
///               zero outside the sampled range
class SpectralDensity {
 public:
  enum class Kind { Flat, Lorentzian, Tabulated };

  static SpectralDensity flat(double level);
  static SpectralDensity lorentzian(double gamma_l, double lambda,
                                    double omega_c);
  static SpectralDensity tabulated(std::vector<double> omega,
                                   std::vector<double> j);
  /// Two-column CSV (omega, J), optional header, omega strictly increasing.
  static SpectralDensity tabulated_from_csv(const std::string& path);

  /// J(omega); throws NonPositiveFrequency for omega <= 0.
  double operator()(double omega) const;

  Kind kind() const { return kind_; }
  double level() const { return level_; }
  double gamma_l() const { return gamma_l_; }
  double lambda() const { return lambda_; }
  double omega_c() const { return omega_c_; }

  /// Markov validity for the Lorentzian: lambda/gamma_l >= min_ratio.
  /// Always true for the other kinds.
  bool markov_ok(double min_ratio = 100.0) const;

  /// Upper integration cutoff for frequency integrals (omega_c + 50 lambda
  /// for the Lorentzian, the last sample for tabulated data, 0 = caller
  /// must choose for flat).
  double default_cutoff() const;

  /// Frequencies where J varies rapidly; used to seed adaptive quadrature.
  std::vector<double> feature_breakpoints() const;

 private:
  SpectralDensity() = default;
  Kind kind_ = Kind::Flat;
  double level_ = 0.0;
  double gamma_l_ = 0.0, lambda_ = 0.0, omega_c_ = 0.0;
  std::vector<double> tab_x_, tab_y_, tab_d_;  // knots and pchip slopes
};

/// Bath temperature in frequency units (hbar = k_B = 1).
struct Thermal {
  double temperature = 0.0;

  explicit Thermal(double t = 0.0) : temperature(t) {
    if (!(t >= 0)) throw ConfigError("Thermal: temperature must be >= 0");
  }
};

/// Bose occupation n(omega) = 1/(e^{omega/T} - 1); exactly 0 at T = 0.
/// Throws NonPositiveFrequency for omega <= 0.
double thermal_occupation(double omega, const Thermal& th);

// ---------------------------------------------------------------------------
// Principal-value quadrature
// ---------------------------------------------------------------------------

struct PvOptions {
  double rel_tol = 1e-8;
  /// Half-width of the symmetric singularity-subtraction window;
  /// <= 0 selects min(pole, omega_max - pole)/10.
  double half_width = 0.0;
  int max_depth = 12;
  /// Extra split points for the adaptive quadrature (sharp features of f).
  std::vector<double> breakpoints;
};

/// P int_0^omega_max f(omega)/(pole - omega) d omega by symmetric-interval
/// singularity subtraction around the pole plus adaptive Gauss-Kronrod
/// quadrature outside. A pole at or beyond omega_max integrates the
/// (then regular) integrand directly. Throws QuadratureFailure when the
/// accumulated error estimate exceeds the tolerance.
double principal_value_integral(const std::function<double(double)>& f,
                                double pole, double omega_max,
                                const PvOptions& opts = {});

/// Full-line principal value of the Lorentzian spectral density,
/// P int_-inf^inf J_Lor(omega)/(pole - omega) d omega =
///   gamma_l lambda/2 * (pole - omega_c)/((pole - omega_c)^2 + lambda^2).
/// A good proxy for the half-line integral when omega_c, pole >> lambda.
double lorentzian_pv_full_line(double gamma_l, double lambda, double omega_c,
                               double pole);

enum class PvMethod {
  Adaptive,             // numerical half-line quadrature
  LorentzianClosedForm  // full-line analytic value (Lorentzian, T = 0 weights)
};

struct PvSettings {
  PvMethod method = PvMethod::Adaptive;
  double rel_tol = 1e-8;
  int max_depth = 12;
  double omega_max = 0.0;  // <= 0: automatic cutoff
};

// ---------------------------------------------------------------------------
// Rates
// ---------------------------------------------------------------------------

/// Raw sideband data: gamma_p = 2 pi J(omega_L + p nu) and occupations
/// n_p at the three frequencies omega_L + nu, omega_L - nu, omega_L.
struct Sidebands {
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  double gamma_zero = 0.0;
  double n_plus = 0.0;
  double n_minus = 0.0;
  double n_zero = 0.0;
};

struct RateOptions {
  /// Replace all occupations by n(omega_0) (the n_p ~ n_fd approximation).
  bool uniform_occupation = false;
  /// Force occupations to a given value (implies uniform).
  std::optional<double> n_fd;
  /// Compute the Lamb-shift and non-secular principal-value scalars.
  bool with_pv = true;
  PvSettings pv;
};

/// All dissipator coefficients for one (field, basis, bath) configuration.
struct RateSet {
  Sidebands sb;

  // Secular rates of the dressed Lindblad channels.
  double sec_minus = 0.0;  // gamma^theta_-, rate of L[sigma~_+]
  double sec_plus = 0.0;   // gamma^theta_+, rate of L[sigma~_-]
  double sec_z = 0.0;      // gamma^theta_z, rate of L[sigma~_z]

  // Non-secular real coefficients.
  double ns_pp = 0.0;  // gamma^theta_{++}
  double ns_zp = 0.0;  // gamma^theta_{z+}
  double ns_zm = 0.0;  // gamma^theta_{z-}
  double ns_pz = 0.0;  // gamma^theta_{+z}
  double ns_mz = 0.0;  // gamma^theta_{-z}

  // Imaginary (principal-value) partners of the non-secular coefficients.
  double s_pp = 0.0, s_zp = 0.0, s_zm = 0.0, s_pz = 0.0, s_mz = 0.0;

  // Lamb-shift scalars.
  double lamb_plus = 0.0;   // s_+
  double lamb_minus = 0.0;  // s_-
  double lamb_z = 0.0;      // s_z
};

struct SecularRates {
  double minus = 0.0, plus = 0.0, z = 0.0;
};

struct NonsecularRates {
  double pp = 0.0, zp = 0.0, zm = 0.0, pz = 0.0, mz = 0.0;
};

struct LambShift {
  double s_plus = 0.0, s_minus = 0.0, s_z = 0.0;
};

struct NonsecularPv {
  double pp = 0.0, zp = 0.0, zm = 0.0, pz = 0.0, mz = 0.0;
};

/// Evaluate J and n at the three sideband frequencies. Throws
/// NonPositiveFrequency when omega_L <= nu.
Sidebands sideband_rates(const SpectralDensity& j, const Thermal& th,
                         const ControlField& field, const DressedBasis& basis,
                         const RateOptions& opts = {});

SecularRates secular_rates(const Sidebands& sb, const DressedBasis& basis);
NonsecularRates nonsecular_rates(const Sidebands& sb,
                                 const DressedBasis& basis);

/// The three Lamb-shift principal-value integrals. Flat spectra give
/// exactly zero (the infinite-width Lorentzian limit).
LambShift lamb_shift(const SpectralDensity& j, const Thermal& th,
                     const ControlField& field, const DressedBasis& basis,
                     const PvSettings& pv = {});

/// The five non-secular principal-value scalars; conventions as lamb_shift.
NonsecularPv nonsecular_pv_terms(const SpectralDensity& j, const Thermal& th,
                                 const ControlField& field,
                                 const DressedBasis& basis,
                                 const PvSettings& pv = {});

/// Assemble the full RateSet from a spectral density.
RateSet make_rate_set(const SpectralDensity& j, const Thermal& th,
                      const ControlField& field, const DressedBasis& basis,
                      const RateOptions& opts = {});

/// Sidebands for a fixed ratio x = gamma_-/gamma_+ without a spectral
/// density, using the rate convention of the dynamics comparisons:
/// (gamma_-, gamma_+) = (2x, 2) gamma0 for x < 1, (gamma0, gamma0) at
/// x = 1, (2, 2/x) gamma0 for x > 1; gamma_zero = gamma0 throughout.
Sidebands fixed_x_sidebands(double x, double gamma0, double n_fd = 0.0);

/// RateSet from explicit sidebands; all principal-value scalars are zero.
RateSet rate_set_from_sidebands(const Sidebands& sb,
                                const DressedBasis& basis);

}  // namespace driqs
