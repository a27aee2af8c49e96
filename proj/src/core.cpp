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

#include "driqs/core.hpp"

#include <cmath>

namespace driqs {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_phase(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0) p += kTwoPi;
  return p;
}
}  // namespace

Mat2 sigma_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 sigma_plus() {
  Mat2 m = Mat2::Zero();
  m(0, 1) = 1;
  return m;
}

Mat2 sigma_minus() {
  Mat2 m = Mat2::Zero();
  m(1, 0) = 1;
  return m;
}

ControlField ControlField::from_omega0(double delta, double omega, double phi,
                                       double omega_0) {
  ControlField f;
  f.delta = delta;
  f.omega = omega;
  f.phi = wrap_phase(phi);
  f.omega_0 = omega_0;
  f.omega_L = omega_0 - delta;
  if (!(f.omega >= 0)) throw ConfigError("ControlField: omega must be >= 0");
  if (!(f.omega_L > 0)) throw ConfigError("ControlField: omega_L must be > 0");
  if (!(f.omega_0 > 0)) throw ConfigError("ControlField: omega_0 must be > 0");
  return f;
}

ControlField ControlField::from_laser(double delta, double omega, double phi,
                                      double omega_L) {
  return from_omega0(delta, omega, phi, omega_L + delta);
}

double ControlField::rwa_ratio() const {
  return std::max(std::abs(delta), omega) / omega_L;
}

DressedBasis dressed_basis(double delta, double omega) {
  const double nu = std::hypot(delta, omega);
  if (nu == 0.0)
    throw DegenerateHamiltonian("dressed_basis: delta = omega = 0");
  DressedBasis b;
  b.nu = nu;
  if (omega == 0.0) {
    b.theta = (delta > 0) ? 0.0 : M_PI;
  } else {
    // tan(theta/2) = (nu - delta)/omega = omega/(nu + delta); the second
    // form avoids cancellation for delta > 0, the first for delta < 0.
    double denom = (delta >= 0) ? nu + delta : omega * omega / (nu - delta);
    b.theta = 2.0 * std::atan2(omega, denom);
  }
  b.c = std::cos(0.5 * b.theta);
  b.s = std::sin(0.5 * b.theta);
  return b;
}

DressedBasis dressed_basis(const ControlField& field) {
  return dressed_basis(field.delta, field.omega);
}

Vec2 phi_plus(const DressedBasis& b) { return Vec2(b.c, b.s); }

Vec2 phi_minus(const DressedBasis& b) { return Vec2(-b.s, b.c); }

Mat2 sigma_tilde_z(const DressedBasis& b) {
  return phi_plus(b) * phi_plus(b).adjoint() -
         phi_minus(b) * phi_minus(b).adjoint();
}

Mat2 sigma_tilde_plus(const DressedBasis& b) {
  return phi_plus(b) * phi_minus(b).adjoint();
}

Mat2 sigma_tilde_minus(const DressedBasis& b) {
  return phi_minus(b) * phi_plus(b).adjoint();
}

EigenoperatorTable eigenoperator_decomposition(const DressedBasis& b) {
  EigenoperatorTable t;
  t.c2 = b.c * b.c;
  t.ms2 = -b.s * b.s;
  t.sc = b.s * b.c;
  t.cos_theta = std::cos(b.theta);
  t.msin_theta = -std::sin(b.theta);
  return t;
}

Mat2 reconstruct_sigma_plus(const EigenoperatorTable& t,
                            const DressedBasis& b) {
  return t.c2 * sigma_tilde_plus(b) + t.ms2 * sigma_tilde_minus(b) +
         t.sc * sigma_tilde_z(b);
}

Mat2 reconstruct_sigma_z(const EigenoperatorTable& t, const DressedBasis& b) {
  return t.cos_theta * sigma_tilde_z(b) +
         t.msin_theta * (sigma_tilde_plus(b) + sigma_tilde_minus(b));
}

double BlochVector::norm() const { return std::sqrt(rx * rx + ry * ry + rz * rz); }

QubitState::QubitState(const Mat2& rho, double tol) : rho_(rho) {
  const double herm = (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > tol)
    throw ConfigError("QubitState: matrix not Hermitian within tolerance");
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tol)
    throw ConfigError("QubitState: trace differs from 1 beyond tolerance");
}

QubitState QubitState::ground() {
  Mat2 m = Mat2::Zero();
  m(1, 1) = 1;
  return QubitState(m);
}

QubitState QubitState::excited() {
  Mat2 m = Mat2::Zero();
  m(0, 0) = 1;
  return QubitState(m);
}

QubitState QubitState::maximally_mixed() { return QubitState(); }

QubitState QubitState::pure(const Vec2& psi) {
  Vec2 n = psi.normalized();
  return QubitState(n * n.adjoint());
}

Eigen::Vector2d QubitState::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Mat2> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

bool QubitState::is_physical(double tol) const {
  return eigenvalues()(0) >= -tol;
}

double QubitState::purity() const { return (rho_ * rho_).trace().real(); }

BlochVector bloch(const QubitState& state) {
  BlochVector v;
  v.rx = 2.0 * state.rho_eg().real();
  v.ry = -2.0 * state.rho_eg().imag();
  v.rz = 2.0 * state.rho_ee().real() - 1.0;
  return v;
}

QubitState from_bloch(const BlochVector& v) {
  Mat2 m;
  m(0, 0) = 0.5 * (1.0 + v.rz);
  m(1, 1) = 0.5 * (1.0 - v.rz);
  m(0, 1) = 0.5 * Complex(v.rx, -v.ry);
  m(1, 0) = 0.5 * Complex(v.rx, v.ry);
  return QubitState(m);
}

namespace {
// Hermitian square root via spectral decomposition, negative eigenvalues
// clipped to zero.
Mat2 psd_sqrt(const Mat2& m) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(m);
  Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}
}  // namespace

double fidelity(const QubitState& rho, const QubitState& sigma) {
  constexpr double kHardFloor = -1e-6;
  if (rho.eigenvalues()(0) < kHardFloor || sigma.eigenvalues()(0) < kHardFloor)
    throw NonPhysicalState("fidelity: eigenvalue below -1e-6");
  const Mat2 sr = psd_sqrt(rho.rho());
  const Mat2 inner = sr * sigma.rho() * sr;
  Eigen::SelfAdjointEigenSolver<Mat2> es(inner, Eigen::EigenvaluesOnly);
  Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
  const double tr = std::sqrt(ev(0)) + std::sqrt(ev(1));
  return std::min(tr * tr, 1.0);
}

}  // namespace driqs
