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

#include "driqs/liouvillian.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>

namespace driqs {

namespace {
const Complex kI(0.0, 1.0);

// Permutation swapping vec indices 1 <-> 2, i.e. rho -> rho^T.
Eigen::Matrix4d transpose_perm() {
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  p(0, 0) = p(3, 3) = 1.0;
  p(1, 2) = p(2, 1) = 1.0;
  return p;
}
}  // namespace

Vec4 vectorize(const Mat2& rho) {
  Vec4 v;
  v << rho(0, 0), rho(0, 1), rho(1, 0), rho(1, 1);
  return v;
}

Mat2 unvectorize(const Vec4& v) {
  Mat2 m;
  m << v(0), v(1), v(2), v(3);
  return m;
}

Mat4 spre(const Mat2& a) {
  return Eigen::kroneckerProduct(a, Mat2::Identity()).eval();
}

Mat4 spost(const Mat2& b) {
  return Eigen::kroneckerProduct(Mat2::Identity(), b.transpose().eval()).eval();
}

Mat4 sandwich(const Mat2& a, const Mat2& b) {
  return Eigen::kroneckerProduct(a, b.transpose().eval()).eval();
}

Mat4 hamiltonian_super(const Mat2& h) {
  return -kI * (spre(h) - spost(h));
}

Mat4 lindblad_super(const Mat2& x) {
  const Mat2 xdx = (x.adjoint() * x).eval();
  return sandwich(x, x.adjoint().eval()) - 0.5 * spre(xdx) - 0.5 * spost(xdx);
}

Mat4 lindblad_term(const Mat2& x, double rate) {
  if (!(rate >= 0)) throw NegativeRate("lindblad_term: rate must be >= 0");
  return rate * lindblad_super(x);
}

Mat4 hc_super(const Mat4& l) {
  // vec(rho^dag) = P conj(vec rho) with P the transpose permutation, so
  // S#(rho) = [S(rho^dag)]^dag has matrix P conj(L) P.
  static const Eigen::Matrix4d p = transpose_perm();
  return p * l.conjugate() * p;
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Fdme:
      return "fdme";
    case GeneratorKind::MmeSecular:
      return "mme-secular";
    case GeneratorKind::MmeNonsecular:
      return "mme-nonsecular";
  }
  return "?";
}

double Liouvillian::trace_defect() const {
  // vec(I)^T picks the trace of L(rho): rows 0 and 3 of each column.
  double worst = 0.0;
  for (int col = 0; col < 4; ++col)
    worst = std::max(worst, std::abs(matrix(0, col) + matrix(3, col)));
  return worst;
}

double Liouvillian::hermiticity_defect() const {
  return (matrix - hc_super(matrix)).cwiseAbs().maxCoeff();
}

namespace {

Mat2 bare_hamiltonian(const ControlField& field) {
  return 0.5 * field.delta * sigma_z() + 0.5 * field.omega * sigma_x();
}

// Restore the laser phase: states transform as rho -> U rho U^dag with
// U = exp(-i phi sigma_z / 2), which multiplies rho_eg by e^{-i phi}.
Mat4 restore_phase(const Mat4& l, double phi) {
  if (phi == 0.0) return l;
  Mat2 u = Mat2::Zero();
  u(0, 0) = std::exp(-kI * (0.5 * phi));
  u(1, 1) = std::exp(kI * (0.5 * phi));
  const Mat4 s = sandwich(u, u.adjoint().eval());
  const Mat4 sinv = sandwich(u.adjoint().eval(), u);
  return s * l * sinv;
}

}  // namespace

Liouvillian build_fdme(const ControlField& field, double gamma_fd,
                       double n_fd) {
  if (!(gamma_fd >= 0)) throw NegativeRate("build_fdme: gamma_fd must be >= 0");
  if (!(n_fd >= 0)) throw ConfigError("build_fdme: n_fd must be >= 0");
  Mat4 l = hamiltonian_super(bare_hamiltonian(field));
  l += lindblad_term(sigma_plus(), gamma_fd * n_fd);
  l += lindblad_term(sigma_minus(), gamma_fd * (1.0 + n_fd));
  Liouvillian out;
  out.matrix = restore_phase(l, field.phi);
  out.kind = GeneratorKind::Fdme;
  out.params.field = field;
  out.params.gamma_fd = gamma_fd;
  out.params.n_fd = n_fd;
  return out;
}

namespace {

Mat2 lamb_hamiltonian(const DressedBasis& basis, const RateSet& rates) {
  const Mat2 sp = sigma_tilde_plus(basis);
  const Mat2 sm = sigma_tilde_minus(basis);
  return rates.lamb_plus * (sp * sm) + rates.lamb_minus * (sm * sp) +
         rates.lamb_z * Mat2::Identity();  // sigma~_z^2 = I
}

Mat4 secular_generator(const ControlField& field, const DressedBasis& basis,
                       const RateSet& rates, bool include_lamb) {
  Mat2 h = bare_hamiltonian(field);
  if (include_lamb) h += lamb_hamiltonian(basis, rates);
  Mat4 l = hamiltonian_super(h);
  l += lindblad_term(sigma_tilde_plus(basis), rates.sec_minus);
  l += lindblad_term(sigma_tilde_minus(basis), rates.sec_plus);
  l += lindblad_term(sigma_tilde_z(basis), rates.sec_z);
  return l;
}

}  // namespace

Liouvillian build_mme_secular(const ControlField& field,
                              const DressedBasis& basis, const RateSet& rates,
                              bool include_lamb) {
  Liouvillian out;
  out.matrix =
      restore_phase(secular_generator(field, basis, rates, include_lamb),
                    field.phi);
  out.kind = GeneratorKind::MmeSecular;
  out.params.field = field;
  out.params.basis = basis;
  out.params.rates = rates;
  out.params.include_lamb = include_lamb;
  return out;
}

Liouvillian build_mme_nonsecular(const ControlField& field,
                                 const DressedBasis& basis,
                                 const RateSet& rates, bool include_lamb) {
  Mat4 l = secular_generator(field, basis, rates, include_lamb);

  const Mat2 sp = sigma_tilde_plus(basis);
  const Mat2 sm = sigma_tilde_minus(basis);
  const Mat2 sz = sigma_tilde_z(basis);
  const Mat2 id = Mat2::Identity();

  const Complex kpp(rates.ns_pp, rates.s_pp);
  const Complex kpz(rates.ns_pz, rates.s_pz);
  const Complex kmz(rates.ns_mz, rates.s_mz);
  const Complex kzp(rates.ns_zp, rates.s_zp);
  const Complex kzm(rates.ns_zm, rates.s_zm);

  Mat4 ns = Mat4::Zero();
  ns += kpp * sandwich(sp, sp);
  ns += kpz * (sandwich((sp * sz).eval(), id) - sandwich(sz, sp));
  ns += kmz * (sandwich((sm * sz).eval(), id) - sandwich(sz, sm));
  ns += kzp * (sandwich((sz * sp).eval(), id) - sandwich(sp, sz));
  ns += kzm * (sandwich((sz * sm).eval(), id) - sandwich(sm, sz));
  l += ns + hc_super(ns);

  Liouvillian out;
  out.matrix = restore_phase(l, field.phi);
  out.kind = GeneratorKind::MmeNonsecular;
  out.params.field = field;
  out.params.basis = basis;
  out.params.rates = rates;
  out.params.include_lamb = include_lamb;
  return out;
}

}  // namespace driqs
