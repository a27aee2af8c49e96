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

#include <stdexcept>
#include <string>

namespace driqs {

/// Base class for all driqs exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input (parameter ranges, malformed files, bad CLI config).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The drive Hamiltonian vanishes (delta = omega = 0), dressed basis undefined.
class DegenerateHamiltonian : public Error {
 public:
  using Error::Error;
};

/// A rate or spectral density was requested at omega <= 0.
class NonPositiveFrequency : public Error {
 public:
  using Error::Error;
};

/// A density matrix has an eigenvalue below the physicality tolerance.
class NonPhysicalState : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// A Lindblad rate must be nonnegative.
class NegativeRate : public Error {
 public:
  using Error::Error;
};

/// The generator has no spectral gap (e.g. the zero matrix).
class NoGap : public Error {
 public:
  using Error::Error;
};

/// The adaptive integrator reduced the step below machine resolution.
class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

/// Target state has (nearly) degenerate eigenvalues, Hamiltonian
/// reconstruction is singular.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// Target state is not compatible with the fixed dissipator (purity
/// condition violated).
class IncompatibleTarget : public Error {
 public:
  using Error::Error;
};

/// Both dressed decay rates vanish, the secular steady state is undefined.
class ZeroTotalRate : public Error {
 public:
  using Error::Error;
};

/// Thermal compensation has no occupation n >= 0 for the requested ratio.
class NoPhysicalSolution : public Error {
 public:
  using Error::Error;
};

/// Thermal compensation is singular at theta = pi/2 (C^2 = S^2).
class SingularAngle : public Error {
 public:
  using Error::Error;
};

}  // namespace driqs
