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

#include <vector>

#include "driqs/liouvillian.hpp"

namespace driqs {

/// Time-ordered samples of an integrated master equation.
struct Trajectory {
  std::vector<double> times;
  std::vector<QubitState> states;
  std::vector<BlochVector> bloch;
  std::vector<bool> physical;

  std::size_t size() const { return times.size(); }
};

struct EvolveOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double physical_tol = 1e-10;
};

/// Integrate d vec(rho)/dt = L vec(rho) with adaptive Dormand-Prince 5(4)
/// stepping and dense output at the grid points. The initial state is
/// attached to t_grid.front(). Throws StepSizeUnderflow if the controller
/// collapses the step.
Trajectory evolve(const Liouvillian& l, const QubitState& rho0,
                  const std::vector<double>& t_grid,
                  const EvolveOptions& opts = {});

struct SteadyState {
  QubitState state;
  double residual = 0.0;  // ||L vec(rho)||_2
  bool physical = true;
};

/// Carries the (hermitized, trace-normalized where possible) null basis
/// when the null space is not one-dimensional.
class DegenerateNullSpace : public Error {
 public:
  DegenerateNullSpace(const std::string& what, std::vector<Mat2> basis)
      : Error(what), basis_(std::move(basis)) {}
  const std::vector<Mat2>& basis() const { return basis_; }

 private:
  std::vector<Mat2> basis_;
};

/// Unit-trace null vector of L via singular-value decomposition. The null
/// space counts as degenerate when a second singular value falls below
/// tol * sigma_max and is not cleanly separated from the smallest one;
/// in that case the basis is returned in the exception rather than an
/// arbitrary pick.
SteadyState steady_state(const Liouvillian& l, double degeneracy_tol = 1e-8);

/// 1/|Re lambda_2| with lambda_2 the nonzero eigenvalue of largest real
/// part. Throws NoGap when no decaying mode exists.
double relaxation_time(const Liouvillian& l);

std::vector<double> linspace(double a, double b, std::size_t n);
std::vector<double> logspace(double a, double b, std::size_t n);

}  // namespace driqs
