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

#include "driqs/analysis.hpp"

#include <cmath>
#include <limits>

namespace driqs {

namespace {

const Complex kI(0.0, 1.0);

QubitState fd_steady_from_params(double delta, double omega, double phi,
                                 double gamma_fd, double n_fd) {
  const double n_tot = 1.0 + 2.0 * n_fd;
  const double den = gamma_fd * gamma_fd * n_tot * n_tot +
                     4.0 * delta * delta + 2.0 * omega * omega;
  if (den == 0.0)
    throw ConfigError(
        "fd_steady_analytic: gamma_fd = delta = omega = 0 has no unique "
        "steady state");
  Mat2 rho;
  const double ee = n_fd / n_tot + omega * omega / n_tot / den;
  const Complex eg = -omega * (2.0 * delta / n_tot + kI * gamma_fd) / den *
                     std::exp(-kI * phi);
  rho(0, 0) = ee;
  rho(1, 1) = 1.0 - ee;
  rho(0, 1) = eg;
  rho(1, 0) = std::conj(eg);
  return QubitState(rho);
}

}  // namespace

QubitState fd_steady_analytic(const ControlField& field, double gamma_fd,
                              double n_fd) {
  if (!(gamma_fd >= 0))
    throw NegativeRate("fd_steady_analytic: gamma_fd must be >= 0");
  if (!(n_fd >= 0)) throw ConfigError("fd_steady_analytic: n_fd must be >= 0");
  return fd_steady_from_params(field.delta, field.omega, field.phi, gamma_fd,
                               n_fd);
}

QubitState mme_secular_steady_analytic(const DressedBasis& basis,
                                       const RateSet& rates, double phi) {
  const double total = rates.sec_minus + rates.sec_plus;
  if (!(total > 0))
    throw ZeroTotalRate("mme_secular_steady_analytic: sec_- + sec_+ <= 0");
  const double p_plus = rates.sec_minus / total;
  const double p_minus = rates.sec_plus / total;
  const double c2 = basis.c * basis.c, s2 = basis.s * basis.s;
  Mat2 rho;
  rho(0, 0) = p_plus * c2 + p_minus * s2;
  rho(1, 1) = p_plus * s2 + p_minus * c2;
  const Complex eg =
      (p_plus - p_minus) * basis.s * basis.c * std::exp(-kI * phi);
  rho(0, 1) = eg;
  rho(1, 0) = std::conj(eg);
  return QubitState(rho);
}

QubitState secular_steady_uniform(const DressedBasis& basis,
                                  double gamma_minus, double gamma_plus,
                                  double n_fd, double phi) {
  const double c2 = basis.c * basis.c, s2 = basis.s * basis.s;
  const double c4 = c2 * c2, s4 = s2 * s2;
  const double den = s4 * gamma_minus + c4 * gamma_plus;
  if (!(den > 0))
    throw ZeroTotalRate("secular_steady_uniform: S^4 g_- + C^4 g_+ <= 0");
  const double n_tot = 1.0 + 2.0 * n_fd;
  Mat2 rho;
  const double ee = n_fd / n_tot + s2 * c2 / n_tot *
                                       (s2 * gamma_minus + c2 * gamma_plus) /
                                       den;
  const Complex eg = basis.s * basis.c / n_tot *
                     (s4 * gamma_minus - c4 * gamma_plus) / den *
                     std::exp(-kI * phi);
  rho(0, 0) = ee;
  rho(1, 1) = 1.0 - ee;
  rho(0, 1) = eg;
  rho(1, 0) = std::conj(eg);
  return QubitState(rho);
}

Mat2 fd_dissipator_action(const QubitState& rho, double gamma_fd,
                          double n_fd) {
  const Mat2& r = rho.rho();
  const Mat2 sp = sigma_plus(), sm = sigma_minus();
  const Mat2 pe = sp * sm;  // |e><e|
  const Mat2 pg = sm * sp;  // |g><g|
  Mat2 d = Mat2::Zero();
  d += gamma_fd * n_fd * (sp * r * sm - 0.5 * (pg * r + r * pg));
  d += gamma_fd * (1.0 + n_fd) * (sm * r * sp - 0.5 * (pe * r + r * pe));
  return d;
}

double fd_purity_residual(const QubitState& rho, double gamma_fd,
                          double n_fd) {
  const Mat2 d = fd_dissipator_action(rho, gamma_fd, n_fd);
  return std::abs((rho.rho() * d).trace());
}

Mat2 control_for_target(const QubitState& rho_target, double gamma_fd,
                        double n_fd, double spectrum_tol, double purity_tol) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(rho_target.rho());
  const Eigen::Vector2d lam = es.eigenvalues();
  if (std::abs(lam(1) - lam(0)) <= spectrum_tol)
    throw DegenerateSpectrum(
        "control_for_target: target eigenvalues are degenerate");

  const double scale = gamma_fd * (1.0 + 2.0 * n_fd);
  const double purity = fd_purity_residual(rho_target, gamma_fd, n_fd);
  if (purity > purity_tol * std::max(scale, 1e-300))
    throw IncompatibleTarget(
        "control_for_target: purity condition violated, residual = " +
        std::to_string(purity));

  const Mat2 d = fd_dissipator_action(rho_target, gamma_fd, n_fd);
  const Mat2 v = es.eigenvectors();
  const Mat2 d_eig = v.adjoint() * d * v;
  Mat2 h_eig = Mat2::Zero();
  h_eig(0, 1) = kI * d_eig(0, 1) / (lam(0) - lam(1));
  h_eig(1, 0) = kI * d_eig(1, 0) / (lam(1) - lam(0));
  Mat2 h = v * h_eig * v.adjoint();
  return 0.5 * (h + h.adjoint().eval());
}

double thermal_compensation(double x, const DressedBasis& basis) {
  if (!(x >= 0)) throw ConfigError("thermal_compensation: x must be >= 0");
  if (x > 1.0)
    throw NoPhysicalSolution(
        "thermal_compensation: no occupation n_fd >= 0 exists for x > 1");
  const double c2 = basis.c * basis.c, s2 = basis.s * basis.s;
  const double cos_theta = c2 - s2;
  if (std::abs(cos_theta) < 1e-12)
    throw SingularAngle("thermal_compensation: theta = pi/2 is singular");
  const double c4 = c2 * c2, s4 = s2 * s2;
  const double n = c4 * s4 * (1.0 - x) / (cos_theta * (c4 + x * s4));
  if (n < 0)
    throw NoPhysicalSolution("thermal_compensation: negative occupation");
  return n;
}

double ellipsoid_residual(const BlochVector& r) {
  const double v =
      2.0 * (r.rx * r.rx + r.ry * r.ry) + (2.0 * r.rz + 1.0) * (2.0 * r.rz + 1.0);
  return std::abs(v - 1.0);
}

std::vector<double> theta_grid_uniform(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i)
    t[i] = 0.5 * M_PI * static_cast<double>(i + 1) / static_cast<double>(n + 1);
  return t;
}

std::vector<double> theta_grid_from_omega(
    const std::vector<double>& omega_over_delta) {
  std::vector<double> t;
  t.reserve(omega_over_delta.size());
  for (double w : omega_over_delta) {
    if (!(w >= 0))
      throw ConfigError("theta grid: Omega/delta must be >= 0");
    t.push_back(std::atan(w));
  }
  return t;
}

namespace {

struct PointRates {
  RateSet rates;
  double x_ratio = 1.0;
  double n_ref = 0.0;  // occupation entering the FD reference
};

PointRates rates_for_point(const SweepConfig& cfg, const ControlField& field,
                           const DressedBasis& basis) {
  PointRates out;
  if (cfg.fixed_x) {
    const double n = cfg.n_fd.value_or(cfg.fixed_x->n_fd);
    out.rates = rate_set_from_sidebands(
        fixed_x_sidebands(cfg.fixed_x->x, cfg.fixed_x->gamma0, n), basis);
    out.x_ratio = cfg.fixed_x->x;
    out.n_ref = n;
  } else if (cfg.spectral) {
    RateOptions opts;
    opts.uniform_occupation = cfg.uniform_occupation;
    opts.n_fd = cfg.n_fd;
    opts.with_pv = cfg.kind == GeneratorKind::MmeNonsecular ||
                   cfg.include_lamb;
    opts.pv = cfg.pv;
    out.rates = make_rate_set(*cfg.spectral, cfg.thermal, field, basis, opts);
    out.x_ratio = out.rates.sb.gamma_plus > 0
                      ? out.rates.sb.gamma_minus / out.rates.sb.gamma_plus
                      : 1.0;
    out.n_ref = cfg.n_fd ? *cfg.n_fd
                         : thermal_occupation(field.omega_0, cfg.thermal);
  } else {
    throw ConfigError("ellipsoid_sweep: the microscopic generators need a "
                      "spectral density or a fixed-x rate model");
  }
  return out;
}

}  // namespace

SweepResult ellipsoid_sweep(const SweepConfig& cfg) {
  SweepResult result;
  result.config = cfg;
  result.points.reserve(cfg.thetas.size() * cfg.phis.size());

  for (double theta : cfg.thetas) {
    if (!(theta > 0) || !(theta < 0.5 * M_PI))
      throw ConfigError("ellipsoid_sweep: theta must lie in (0, pi/2)");
    const double omega = cfg.delta * std::tan(theta);
    for (double phi : cfg.phis) {
      const ControlField field =
          ControlField::from_omega0(cfg.delta, omega, phi, cfg.omega0);
      const DressedBasis basis = dressed_basis(field);

      SweepPoint pt;
      pt.theta = theta;
      pt.omega_over_delta = omega / cfg.delta;
      pt.phi = phi;

      QubitState steady;
      double n_ref = 0.0;
      if (cfg.kind == GeneratorKind::Fdme && !cfg.spectral && !cfg.fixed_x) {
        const double gfd = cfg.gamma_fd.value_or(0.0);
        const double n =
            cfg.n_fd.value_or(thermal_occupation(field.omega_0, cfg.thermal));
        steady = fd_steady_analytic(field, gfd, n);
        n_ref = n;
        const Liouvillian gen = build_fdme(field, gfd, n);
        pt.residual = (gen.matrix * vectorize(steady.rho())).norm();
        pt.x_ratio = 1.0;
      } else {
        const PointRates pr = rates_for_point(cfg, field, basis);
        pt.x_ratio = pr.x_ratio;
        n_ref = pr.n_ref;
        switch (cfg.kind) {
          case GeneratorKind::Fdme: {
            double gfd = cfg.gamma_fd.value_or(0.0);
            if (!cfg.gamma_fd && cfg.spectral)
              gfd = 2.0 * M_PI * (*cfg.spectral)(field.omega_0);
            steady = fd_steady_analytic(field, gfd, n_ref);
            const Liouvillian gen = build_fdme(field, gfd, n_ref);
            pt.residual = (gen.matrix * vectorize(steady.rho())).norm();
            break;
          }
          case GeneratorKind::MmeSecular: {
            steady = mme_secular_steady_analytic(basis, pr.rates, phi);
            const Liouvillian gen =
                build_mme_secular(field, basis, pr.rates, cfg.include_lamb);
            pt.residual = (gen.matrix * vectorize(steady.rho())).norm();
            break;
          }
          case GeneratorKind::MmeNonsecular: {
            const Liouvillian gen = build_mme_nonsecular(
                field, basis, pr.rates, cfg.include_lamb);
            const SteadyState ss = steady_state(gen, cfg.degeneracy_tol);
            steady = ss.state;
            pt.residual = ss.residual;
            break;
          }
        }
      }

      pt.r = bloch(steady);
      pt.physical = steady.is_physical();
      pt.ellipsoid_defect = ellipsoid_residual(pt.r);
      const QubitState fd_ref = fd_steady_analytic(field, 0.0, n_ref);
      pt.fidelity_vs_fd = steady.is_physical(1e-9)
                              ? fidelity(fd_ref, steady)
                              : std::numeric_limits<double>::quiet_NaN();
      result.points.push_back(pt);
    }
  }
  return result;
}

FidelityMap fidelity_map(const FidelityMapConfig& config) {
  FidelityMap map;
  map.config = config;
  if (map.config.omega_over_delta.empty())
    map.config.omega_over_delta = logspace(0.1, 100.0, 200);
  if (map.config.log10_x.empty())
    map.config.log10_x = linspace(-2.0, 2.0, 81);
  const auto& omegas = map.config.omega_over_delta;
  const auto& xs = map.config.log10_x;
  map.value.reserve(xs.size() * omegas.size());

  for (double lx : xs) {
    const double x = std::pow(10.0, lx);
    for (double w : omegas) {
      const double omega = config.delta * w;
      const DressedBasis basis = dressed_basis(config.delta, omega);
      const QubitState fd = fd_steady_from_params(
          config.delta, omega, config.phi, 0.0, config.n_fd);
      const QubitState sec =
          secular_steady_uniform(basis, x, 1.0, config.n_fd, config.phi);
      map.value.push_back(fidelity(fd, sec));
    }
  }
  return map;
}

std::vector<CompensationPoint> compensation_curve(
    double x, const std::vector<double>& omega_over_delta, double delta,
    double phi) {
  std::vector<CompensationPoint> curve;
  curve.reserve(omega_over_delta.size());
  for (double w : omega_over_delta) {
    CompensationPoint pt;
    pt.omega_over_delta = w;
    if (w == 0.0) {
      pt.n_fd = 0.0;
      pt.defect = 0.0;
      curve.push_back(pt);
      continue;
    }
    const DressedBasis basis = dressed_basis(delta, delta * w);
    pt.n_fd = thermal_compensation(x, basis);
    const QubitState target = secular_steady_uniform(basis, 1.0, 1.0, 0.0, phi);
    const QubitState comp = secular_steady_uniform(basis, x, 1.0, pt.n_fd, phi);
    const BlochVector rt = bloch(target), rc = bloch(comp);
    pt.defect = std::sqrt((rt.rx - rc.rx) * (rt.rx - rc.rx) +
                          (rt.ry - rc.ry) * (rt.ry - rc.ry) +
                          (rt.rz - rc.rz) * (rt.rz - rc.rz));
    curve.push_back(pt);
  }
  return curve;
}

}  // namespace driqs
