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

#include "driqs/core.hpp"
#include "driqs/reservoir.hpp"

namespace driqs {

using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Row-major vectorization over the (|e>, |g>) basis:
// vec(rho) = (rho_ee, rho_eg, rho_ge, rho_gg), so that
// vec(A rho B) = (A (x) B^T) vec(rho).
Vec4 vectorize(const Mat2& rho);
Mat2 unvectorize(const Vec4& v);

Mat4 spre(const Mat2& a);                     // rho -> A rho
Mat4 spost(const Mat2& b);                    // rho -> rho B
Mat4 sandwich(const Mat2& a, const Mat2& b);  // rho -> A rho B

/// rho -> -i [H, rho]
Mat4 hamiltonian_super(const Mat2& h);

/// rho -> X rho X^dag - {X^dag X, rho}/2
Mat4 lindblad_super(const Mat2& x);

/// rate * L[X]; throws NegativeRate.
Mat4 lindblad_term(const Mat2& x, double rate);

/// Superoperator Hermitian conjugate: S#(rho) = [S(rho^dag)]^dag.
/// A generator preserves Hermiticity iff hc_super(L) == L.
Mat4 hc_super(const Mat4& l);

enum class GeneratorKind { Fdme, MmeSecular, MmeNonsecular };

const char* to_string(GeneratorKind kind);

/// Parameter snapshot frozen into each generator (self-describing output).
struct GeneratorParams {
  ControlField field;
  std::optional<DressedBasis> basis;
  std::optional<RateSet> rates;  // MME generators
  double gamma_fd = 0.0;         // FDME
  double n_fd = 0.0;             // FDME
  bool include_lamb = true;
};

/// A constant 4x4 generator acting on vec(rho), together with its kind and
/// the parameters it was built from. Immutable once built.
struct Liouvillian {
  Mat4 matrix = Mat4::Zero();
  GeneratorKind kind = GeneratorKind::Fdme;
  GeneratorParams params;

  /// max |(vec I)^T L| column sum defect; zero for trace-preserving maps.
  double trace_defect() const;
  /// max |L - hc_super(L)|; zero for Hermiticity-preserving maps.
  double hermiticity_defect() const;
};

/// Fixed-dissipator master equation: H = H_S together with the undriven
/// dissipator gamma_fd n_fd L[sigma_+] + gamma_fd (1+n_fd) L[sigma_-].
Liouvillian build_fdme(const ControlField& field, double gamma_fd,
                       double n_fd);

/// Secular microscopic master equation in the dressed basis:
/// H_S (+ H_LS) with the three dressed Lindblad channels.
Liouvillian build_mme_secular(const ControlField& field,
                              const DressedBasis& basis, const RateSet& rates,
                              bool include_lamb = true);

/// Full microscopic master equation: the secular generator plus the ten
/// non-secular terms and their Hermitian conjugates. Trace- and
/// Hermiticity-preserving but not guaranteed completely positive.
Liouvillian build_mme_nonsecular(const ControlField& field,
                                 const DressedBasis& basis,
                                 const RateSet& rates,
                                 bool include_lamb = true);

}  // namespace driqs
