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

#include "driqs/dynamics.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>

namespace driqs {

namespace {

using OdeState = std::vector<std::complex<double>>;

Vec4 to_vec4(const OdeState& y) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = y[static_cast<std::size_t>(i)];
  return v;
}

QubitState state_from_vec(const Vec4& v) {
  Mat2 m = unvectorize(v);
  m = 0.5 * (m + m.adjoint().eval());  // shed integrator round-off
  const double tr = m.trace().real();
  if (std::abs(tr) > 1e-300) m /= tr;
  return QubitState(m, 1e-6);
}

}  // namespace

Trajectory evolve(const Liouvillian& l, const QubitState& rho0,
                  const std::vector<double>& t_grid,
                  const EvolveOptions& opts) {
  if (t_grid.empty()) throw ConfigError("evolve: empty time grid");
  if (!(t_grid.front() >= 0)) throw ConfigError("evolve: t0 must be >= 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw ConfigError("evolve: time grid must be strictly increasing");

  const Mat4 gen = l.matrix;
  auto rhs = [&gen](const OdeState& y, OdeState& dydt, double) {
    const Vec4 v = gen * to_vec4(y);
    dydt.resize(4);
    for (int i = 0; i < 4; ++i) dydt[static_cast<std::size_t>(i)] = v(i);
  };

  Trajectory traj;
  traj.times = t_grid;
  traj.states.reserve(t_grid.size());

  auto record = [&](const Vec4& v) {
    const QubitState st = state_from_vec(v);
    traj.states.push_back(st);
    traj.bloch.push_back(bloch(st));
    traj.physical.push_back(st.is_physical(opts.physical_tol));
  };

  const Vec4 v0 = vectorize(rho0.rho());
  record(v0);
  if (t_grid.size() == 1) return traj;

  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_dense_output(opts.abs_tol, opts.rel_tol,
                                        ode::runge_kutta_dopri5<OdeState>());

  const double t0 = t_grid.front();
  const double t_end = t_grid.back();
  const double norm = gen.cwiseAbs().maxCoeff();
  double dt0 = (t_end - t0) / 100.0;
  if (norm > 0) dt0 = std::min(dt0, 0.1 / norm);

  OdeState y0(4);
  for (int i = 0; i < 4; ++i) y0[static_cast<std::size_t>(i)] = v0(i);
  stepper.initialize(y0, t0, dt0);

  const double dt_floor =
      512.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, t_end);
  std::size_t next = 1;
  while (next < t_grid.size()) {
    while (stepper.current_time() < t_grid[next]) {
      stepper.do_step(rhs);
      if (std::abs(stepper.current_time_step()) < dt_floor)
        throw StepSizeUnderflow("evolve: step size collapsed at t = " +
                                std::to_string(stepper.current_time()));
    }
    OdeState y(4);
    while (next < t_grid.size() && t_grid[next] <= stepper.current_time()) {
      stepper.calc_state(t_grid[next], y);
      record(to_vec4(y));
      ++next;
    }
  }
  return traj;
}

SteadyState steady_state(const Liouvillian& l, double degeneracy_tol) {
  Eigen::JacobiSVD<Mat4> svd(l.matrix, Eigen::ComputeFullV);
  const Eigen::Vector4d sv = svd.singularValues();
  const double smax = sv(0);

  auto state_from_column = [&](int col) -> Mat2 {
    Mat2 m = unvectorize(svd.matrixV().col(col));
    m = 0.5 * (m + m.adjoint().eval());
    return m;
  };

  // sv(3) is the candidate null direction; sv(2) signals degeneracy when it
  // is both small against smax and not separated from sv(3) by orders of
  // magnitude (a cleanly separated slow mode is still a 1-d null space).
  const bool second_small = smax == 0.0 || sv(2) <= degeneracy_tol * smax;
  const bool separated = sv(2) > 1e3 * sv(3) && sv(2) > 0.0;
  if (second_small && !separated) {
    std::vector<Mat2> basis;
    for (int col = 3; col >= 0; --col) {
      if (smax == 0.0 || sv(col) <= degeneracy_tol * smax)
        basis.push_back(state_from_column(col));
    }
    throw DegenerateNullSpace(
        "steady_state: null space dimension > 1 at tolerance " +
            std::to_string(degeneracy_tol),
        std::move(basis));
  }

  Mat2 m = state_from_column(3);
  const double tr = m.trace().real();
  if (std::abs(tr) < 1e-12)
    throw DegenerateNullSpace("steady_state: traceless null vector", {m});
  m /= tr;

  SteadyState out{QubitState(m, 1e-6), 0.0, true};
  out.residual = (l.matrix * vectorize(m)).norm();
  out.physical = out.state.is_physical();
  return out;
}

double relaxation_time(const Liouvillian& l) {
  Eigen::ComplexEigenSolver<Mat4> es(l.matrix, false);
  const Vec4 ev = es.eigenvalues();
  double scale = 0.0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(ev(i)));
  if (scale == 0.0) throw NoGap("relaxation_time: zero generator");

  double best = std::numeric_limits<double>::lowest();
  bool found = false;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(ev(i)) <= 1e-12 * scale) continue;  // the stationary mode
    if (ev(i).real() > best) {
      best = ev(i).real();
      found = true;
    }
  }
  if (!found || !(best < 0) || std::abs(best) < 1e-14 * scale)
    throw NoGap("relaxation_time: no decaying mode");
  return 1.0 / std::abs(best);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {a};
  std::vector<double> v(n);
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + h * static_cast<double>(i);
  v.back() = b;
  return v;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
  if (!(a > 0) || !(b > 0))
    throw ConfigError("logspace: endpoints must be positive");
  std::vector<double> v = linspace(std::log(a), std::log(b), n);
  for (double& x : v) x = std::exp(x);
  if (!v.empty()) v.back() = b;
  return v;
}

}  // namespace driqs
