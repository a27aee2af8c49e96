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

#include <Eigen/Dense>
#include <complex>

#include "driqs/errors.hpp"

namespace driqs {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

// Basis order is (|e>, |g>) everywhere: index 0 = excited, 1 = ground,
// so sigma_z = diag(+1, -1). The row-major vectorization in the
// liouvillian module depends on this ordering.
inline Mat2 identity2() { return Mat2::Identity(); }
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();
Mat2 sigma_plus();   // |e><g|
Mat2 sigma_minus();  // |g><e|

/// Laser/qubit parameters of the rotating-frame Hamiltonian
/// H_S = (delta sigma_z + omega sigma_x) / 2, with hbar = 1 and all
/// frequencies angular. The phase phi is restored on the steady states
/// and generators by a unitary rotation about z.
struct ControlField {
  double delta = 0.0;    // detuning, omega_0 - omega_L
  double omega = 0.0;    // Rabi frequency, >= 0
  double phi = 0.0;      // laser phase in [0, 2*pi)
  double omega_L = 0.0;  // laser frequency, > 0
  double omega_0 = 0.0;  // qubit frequency, omega_L + delta

  /// Build from qubit frequency; omega_L = omega_0 - delta.
  static ControlField from_omega0(double delta, double omega, double phi,
                                  double omega_0);
  /// Build from laser frequency; omega_0 = omega_L + delta.
  static ControlField from_laser(double delta, double omega, double phi,
                                 double omega_L);

  /// max(|delta|, omega) / omega_L; the rotating-wave approximation needs
  /// this to be small. Violation is a warning, never an error.
  double rwa_ratio() const;
  bool rwa_ok(double threshold = 0.01) const { return rwa_ratio() < threshold; }
};

/// Derived quantities diagonalizing H_S: splitting nu = sqrt(delta^2+omega^2),
/// mixing angle theta = 2 atan[(nu-delta)/omega], C = cos(theta/2),
/// S = sin(theta/2). The eigenstates are |phi_+> = C|e> + S|g> and
/// |phi_-> = C|g> - S|e>.
struct DressedBasis {
  double nu = 0.0;
  double theta = 0.0;  // in [0, pi]; pi is the omega = 0, delta < 0 limit
  double c = 1.0;
  double s = 0.0;
};

/// Diagonalize H_S. Throws DegenerateHamiltonian when delta = omega = 0.
DressedBasis dressed_basis(const ControlField& field);
DressedBasis dressed_basis(double delta, double omega);

Vec2 phi_plus(const DressedBasis& b);   // (C, S)
Vec2 phi_minus(const DressedBasis& b);  // (-S, C)

// Eigenoperators of H_S: sigma~_z = |phi_+><phi_+| - |phi_-><phi_-| and
// sigma~_± = |phi_±><phi_∓|.
Mat2 sigma_tilde_z(const DressedBasis& b);
Mat2 sigma_tilde_plus(const DressedBasis& b);
Mat2 sigma_tilde_minus(const DressedBasis& b);

/// Coefficients expressing the bare operators in terms of the dressed ones:
///   sigma_± = c2 sigma~_± + ms2 sigma~_∓ + sc sigma~_z,
///   sigma_z = cos_theta sigma~_z + msin_theta (sigma~_+ + sigma~_-).
struct EigenoperatorTable {
  double c2;          // C^2
  double ms2;         // -S^2
  double sc;          // S*C
  double cos_theta;   // cos(theta)
  double msin_theta;  // -sin(theta)
};

EigenoperatorTable eigenoperator_decomposition(const DressedBasis& b);

/// Reassemble bare operators from the table (used to verify the identity).
Mat2 reconstruct_sigma_plus(const EigenoperatorTable& t, const DressedBasis& b);
Mat2 reconstruct_sigma_z(const EigenoperatorTable& t, const DressedBasis& b);

struct BlochVector {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;

  double norm() const;
};

/// 2x2 Hermitian unit-trace density matrix in the (|e>, |g>) basis.
/// Hermiticity and unit trace are enforced at construction; positivity is
/// exposed as a predicate but not enforced (non-secular master equations
/// can produce non-physical states).
class QubitState {
 public:
  QubitState() : rho_(Mat2::Identity() * 0.5) {}
  /// Validates Hermiticity and unit trace to `tol` and stores the matrix.
  explicit QubitState(const Mat2& rho, double tol = 1e-9);

  static QubitState ground();
  static QubitState excited();
  static QubitState maximally_mixed();
  static QubitState pure(const Vec2& psi);

  const Mat2& rho() const { return rho_; }
  Complex rho_ee() const { return rho_(0, 0); }
  Complex rho_eg() const { return rho_(0, 1); }

  /// Real eigenvalues in increasing order.
  Eigen::Vector2d eigenvalues() const;
  /// Both eigenvalues >= -tol.
  bool is_physical(double tol = 1e-10) const;
  double purity() const;

 private:
  Mat2 rho_;
};

BlochVector bloch(const QubitState& state);
QubitState from_bloch(const BlochVector& v);

/// Uhlmann fidelity, squared convention: F = [Tr sqrt(sqrt(rho) sigma
/// sqrt(rho))]^2. Eigenvalues in [-1e-6, 0) are clipped to zero; below
/// that NonPhysicalState is thrown.
double fidelity(const QubitState& rho, const QubitState& sigma);

}  // namespace driqs
