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

#include "driqs/reservoir.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

namespace driqs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Fritsch-Carlson slopes for a shape-preserving cubic Hermite interpolant.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n == 1) return d;
  std::vector<double> h(n - 1), s(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    s[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = s[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i - 1] * s[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
    }
  }
  // One-sided three-point endpoint slopes, clamped to keep the shape.
  auto endpoint = [](double h0, double h1, double s0, double s1) {
    double d0 = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (d0 * s0 <= 0.0)
      d0 = 0.0;
    else if (s0 * s1 < 0.0 && std::abs(d0) > 3.0 * std::abs(s0))
      d0 = 3.0 * s0;
    return d0;
  };
  d[0] = endpoint(h[0], h[1], s[0], s[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
  return d;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& d, double t) {
  if (t <= x.front() || t >= x.back()) {
    if (t == x.front()) return y.front();
    if (t == x.back()) return y.back();
    return 0.0;  // outside the sampled range the density is taken as zero
  }
  const auto it = std::upper_bound(x.begin(), x.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
  const double h = x[i + 1] - x[i];
  const double u = (t - x[i]) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1;
  const double h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2;
  const double h11 = u3 - u2;
  const double v = h00 * y[i] + h * h10 * d[i] + h01 * y[i + 1] + h * h11 * d[i + 1];
  return std::max(v, 0.0);
}

}  // namespace

SpectralDensity SpectralDensity::flat(double level) {
  if (!(level >= 0)) throw ConfigError("SpectralDensity::flat: level < 0");
  SpectralDensity j;
  j.kind_ = Kind::Flat;
  j.level_ = level;
  return j;
}

SpectralDensity SpectralDensity::lorentzian(double gamma_l, double lambda,
                                            double omega_c) {
  if (!(gamma_l > 0) || !(lambda > 0) || !(omega_c > 0))
    throw ConfigError("SpectralDensity::lorentzian: parameters must be > 0");
  SpectralDensity j;
  j.kind_ = Kind::Lorentzian;
  j.gamma_l_ = gamma_l;
  j.lambda_ = lambda;
  j.omega_c_ = omega_c;
  return j;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> omega,
                                           std::vector<double> j) {
  if (omega.size() != j.size() || omega.size() < 2)
    throw ConfigError("SpectralDensity::tabulated: need >= 2 samples");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0))
      throw ConfigError("SpectralDensity::tabulated: omega must be > 0");
    if (i > 0 && !(omega[i] > omega[i - 1]))
      throw ConfigError(
          "SpectralDensity::tabulated: omega must be strictly increasing");
    if (!(j[i] >= 0))
      throw ConfigError("SpectralDensity::tabulated: J must be >= 0");
  }
  SpectralDensity out;
  out.kind_ = Kind::Tabulated;
  out.tab_d_ = pchip_slopes(omega, j);
  out.tab_x_ = std::move(omega);
  out.tab_y_ = std::move(j);
  return out;
}

SpectralDensity SpectralDensity::tabulated_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spectral density file: " + path);
  std::vector<double> w, j;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string cells = line;
    std::replace(cells.begin(), cells.end(), ',', ' ');
    std::istringstream ss(cells);
    double a, b;
    if (!(ss >> a >> b)) {
      if (first) {
        first = false;  // tolerate a single header line
        continue;
      }
      throw ConfigError("malformed spectral density row: " + line);
    }
    first = false;
    w.push_back(a);
    j.push_back(b);
  }
  return tabulated(std::move(w), std::move(j));
}

double SpectralDensity::operator()(double omega) const {
  if (!(omega > 0))
    throw NonPositiveFrequency("spectral density evaluated at omega <= 0");
  switch (kind_) {
    case Kind::Flat:
      return level_;
    case Kind::Lorentzian: {
      const double d = omega_c_ - omega;
      return gamma_l_ / kTwoPi * lambda_ * lambda_ / (d * d + lambda_ * lambda_);
    }
    case Kind::Tabulated:
      return pchip_eval(tab_x_, tab_y_, tab_d_, omega);
  }
  return 0.0;
}

bool SpectralDensity::markov_ok(double min_ratio) const {
  if (kind_ != Kind::Lorentzian) return true;
  return lambda_ / gamma_l_ >= min_ratio;
}

double SpectralDensity::default_cutoff() const {
  switch (kind_) {
    case Kind::Flat:
      return 0.0;
    case Kind::Lorentzian:
      return omega_c_ + 50.0 * lambda_;
    case Kind::Tabulated:
      return tab_x_.back();
  }
  return 0.0;
}

std::vector<double> SpectralDensity::feature_breakpoints() const {
  std::vector<double> b;
  if (kind_ == Kind::Lorentzian) {
    for (double k : {-50.0, -5.0, -1.0, 0.0, 1.0, 5.0})
      b.push_back(omega_c_ + k * lambda_);
  } else if (kind_ == Kind::Tabulated) {
    b = tab_x_;
  }
  return b;
}

double thermal_occupation(double omega, const Thermal& th) {
  if (!(omega > 0))
    throw NonPositiveFrequency("thermal_occupation: omega must be > 0");
  if (th.temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / th.temperature);
}

// ---------------------------------------------------------------------------
// Principal-value quadrature
// ---------------------------------------------------------------------------

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Accum {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

void integrate_segment(const std::function<double(double)>& g, double a,
                       double b, int depth, double tol, Accum& acc) {
  if (!(b > a)) return;
  double err = 0.0, l1 = 0.0;
  const double v = GK::integrate(g, a, b, static_cast<unsigned>(depth), tol,
                                 &err, &l1);
  acc.value += v;
  acc.error += err;
  acc.l1 += l1;
}

// Split [a, b] at the supplied points and integrate each piece.
void integrate_with_breaks(const std::function<double(double)>& g, double a,
                           double b, const std::vector<double>& breaks,
                           int depth, double tol, Accum& acc) {
  std::vector<double> pts{a};
  for (double p : breaks)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    integrate_segment(g, pts[i], pts[i + 1], depth, tol, acc);
}

}  // namespace

double principal_value_integral(const std::function<double(double)>& f,
                                double pole, double omega_max,
                                const PvOptions& opts) {
  if (!(pole > 0))
    throw ConfigError("principal_value_integral: pole must be > 0");
  if (!(omega_max > 0))
    throw ConfigError("principal_value_integral: omega_max must be > 0");

  const double seg_tol = opts.rel_tol / 16.0;
  Accum acc;
  const auto g = [&](double w) { return f(w) / (pole - w); };

  if (pole >= omega_max) {
    // Singularity outside the integration domain: plain adaptive quadrature.
    integrate_with_breaks(g, 0.0, omega_max, opts.breakpoints, opts.max_depth,
                          seg_tol, acc);
  } else {
    double h = opts.half_width;
    const double hmax = 0.5 * std::min(pole, omega_max - pole);
    if (!(h > 0) || h > hmax)
      h = std::min(std::min(pole, omega_max - pole) / 10.0, hmax);
    // Symmetric window around the pole: the constant part cancels exactly,
    //   P int_{pole-h}^{pole+h} f(w)/(pole-w) dw
    //     = int_0^h [f(pole-u) - f(pole+u)]/u du,
    // which is regular (-> -2 f'(pole) as u -> 0).
    const auto window = [&](double u) {
      return (f(pole - u) - f(pole + u)) / u;
    };
    integrate_segment(window, 0.0, h, opts.max_depth, seg_tol, acc);
    integrate_with_breaks(g, 0.0, pole - h, opts.breakpoints, opts.max_depth,
                          seg_tol, acc);
    integrate_with_breaks(g, pole + h, omega_max, opts.breakpoints,
                          opts.max_depth, seg_tol, acc);
  }

  // Cancellation between segments is legitimate, so convergence is judged
  // against the L1 mass when the result itself is small.
  const double scale = std::max(std::abs(acc.value), acc.l1) + 1e-300;
  if (acc.error > opts.rel_tol * scale)
    throw QuadratureFailure("principal_value_integral: error estimate " +
                            std::to_string(acc.error) +
                            " exceeds tolerance (L1 = " +
                            std::to_string(acc.l1) + ")");
  return acc.value;
}

double lorentzian_pv_full_line(double gamma_l, double lambda, double omega_c,
                               double pole) {
  const double d = pole - omega_c;
  return 0.5 * gamma_l * lambda * d / (d * d + lambda * lambda);
}

// ---------------------------------------------------------------------------
// Rates
// ---------------------------------------------------------------------------

Sidebands sideband_rates(const SpectralDensity& j, const Thermal& th,
                         const ControlField& field, const DressedBasis& basis,
                         const RateOptions& opts) {
  const double wl = field.omega_L;
  const double nu = basis.nu;
  if (!(wl - nu > 0))
    throw NonPositiveFrequency(
        "sideband_rates: omega_L - nu <= 0, the lower sideband is not a "
        "positive frequency");
  Sidebands sb;
  sb.gamma_plus = kTwoPi * j(wl + nu);
  sb.gamma_minus = kTwoPi * j(wl - nu);
  sb.gamma_zero = kTwoPi * j(wl);
  if (opts.n_fd) {
    sb.n_plus = sb.n_minus = sb.n_zero = *opts.n_fd;
  } else if (opts.uniform_occupation) {
    const double n0 = thermal_occupation(field.omega_0, th);
    sb.n_plus = sb.n_minus = sb.n_zero = n0;
  } else {
    sb.n_plus = thermal_occupation(wl + nu, th);
    sb.n_minus = thermal_occupation(wl - nu, th);
    sb.n_zero = thermal_occupation(wl, th);
  }
  return sb;
}

SecularRates secular_rates(const Sidebands& sb, const DressedBasis& basis) {
  const double c2 = basis.c * basis.c, s2 = basis.s * basis.s;
  const double c4 = c2 * c2, s4 = s2 * s2;
  SecularRates r;
  r.minus = c4 * sb.gamma_plus * sb.n_plus +
            s4 * sb.gamma_minus * (1.0 + sb.n_minus);
  r.plus = c4 * sb.gamma_plus * (1.0 + sb.n_plus) +
           s4 * sb.gamma_minus * sb.n_minus;
  r.z = s2 * c2 * sb.gamma_zero * (1.0 + 2.0 * sb.n_zero);
  return r;
}

NonsecularRates nonsecular_rates(const Sidebands& sb,
                                 const DressedBasis& basis) {
  const double c = basis.c, s = basis.s;
  const double c2 = c * c, s2 = s * s, cs = c * s;
  NonsecularRates r;
  r.pp = -0.5 * c2 * s2 *
         (sb.gamma_minus * (1.0 + 2.0 * sb.n_minus) +
          sb.gamma_plus * (1.0 + 2.0 * sb.n_plus));
  r.zp = -0.5 * cs *
         (sb.gamma_plus * sb.n_plus * c2 -
          sb.gamma_minus * (1.0 + sb.n_minus) * s2);
  r.zm = -0.5 * cs *
         (sb.gamma_plus * (1.0 + sb.n_plus) * c2 -
          sb.gamma_minus * sb.n_minus * s2);
  r.pz = -0.5 * sb.gamma_zero * cs * ((1.0 + sb.n_zero) * c2 - sb.n_zero * s2);
  r.mz = -0.5 * sb.gamma_zero * cs * (sb.n_zero * c2 - (1.0 + sb.n_zero) * s2);
  return r;
}

namespace {

// P int_0^cutoff J(w) weight(w) / (pole - w) dw for the two thermal weights
// 1 + n(w) and n(w). The flat spectrum yields exactly zero: it is the
// infinite-width limit of the Lorentzian, for which every principal part
// tends to zero (the bare half-line integral would diverge logarithmically).
struct PvPrimitives {
  double a_plus = 0.0, a_minus = 0.0, a_zero = 0.0;  // weight 1 + n
  double b_plus = 0.0, b_minus = 0.0, b_zero = 0.0;  // weight n
};

double pv_weighted(const SpectralDensity& j, const Thermal& th, bool occ_weight,
                   double pole, const PvSettings& pv) {
  if (j.kind() == SpectralDensity::Kind::Flat) return 0.0;
  const double temp = th.temperature;
  if (occ_weight && temp == 0.0) return 0.0;

  if (pv.method == PvMethod::LorentzianClosedForm) {
    if (j.kind() != SpectralDensity::Kind::Lorentzian)
      throw ConfigError("closed-form principal value needs a Lorentzian");
    if (temp != 0.0)
      throw ConfigError(
          "closed-form principal value supports zero temperature only");
    return lorentzian_pv_full_line(j.gamma_l(), j.lambda(), j.omega_c(), pole);
  }

  double cutoff = pv.omega_max > 0 ? pv.omega_max : j.default_cutoff();
  if (!(cutoff > 0))
    throw ConfigError("principal value over a flat-like density needs an "
                      "explicit omega_max");
  // Keep the singular region inside the domain when a pole lies beyond the
  // spectral feature; the tail added this way is negligible by construction.
  const double margin =
      j.kind() == SpectralDensity::Kind::Lorentzian ? 50.0 * j.lambda() : 0.0;
  cutoff = std::max(cutoff, pole + margin);

  PvOptions opts;
  opts.rel_tol = pv.rel_tol;
  opts.max_depth = pv.max_depth;
  opts.breakpoints = j.feature_breakpoints();
  if (temp > 0) {
    opts.breakpoints.push_back(temp);
    opts.breakpoints.push_back(10.0 * temp);
  }
  if (j.kind() == SpectralDensity::Kind::Lorentzian)
    opts.half_width = std::min(j.lambda(), pole) / 10.0;

  const auto f = [&](double w) {
    if (w <= 0) return 0.0;
    const double base = j(w);
    if (!occ_weight && temp == 0.0) return base;
    const double n = thermal_occupation(w, th);
    return base * (occ_weight ? n : 1.0 + n);
  };
  return principal_value_integral(f, pole, cutoff, opts);
}

PvPrimitives pv_primitives(const SpectralDensity& j, const Thermal& th,
                           const ControlField& field, const DressedBasis& basis,
                           const PvSettings& pv) {
  const double wl = field.omega_L, nu = basis.nu;
  if (!(wl - nu > 0))
    throw NonPositiveFrequency("principal values: omega_L - nu <= 0");
  PvPrimitives p;
  p.a_plus = pv_weighted(j, th, false, wl + nu, pv);
  p.a_minus = pv_weighted(j, th, false, wl - nu, pv);
  p.a_zero = pv_weighted(j, th, false, wl, pv);
  p.b_plus = pv_weighted(j, th, true, wl + nu, pv);
  p.b_minus = pv_weighted(j, th, true, wl - nu, pv);
  p.b_zero = pv_weighted(j, th, true, wl, pv);
  return p;
}

LambShift lamb_from_primitives(const PvPrimitives& p,
                               const DressedBasis& basis) {
  const double c2 = basis.c * basis.c, s2 = basis.s * basis.s;
  const double c4 = c2 * c2, s4 = s2 * s2;
  LambShift ls;
  ls.s_plus = c4 * p.a_plus - s4 * p.b_minus;
  ls.s_minus = s4 * p.a_minus - c4 * p.b_plus;
  ls.s_z = s2 * c2 * (p.a_zero - p.b_zero);
  return ls;
}

NonsecularPv nspv_from_primitives(const PvPrimitives& p,
                                  const DressedBasis& basis) {
  const double c = basis.c, s = basis.s;
  const double c2 = c * c, s2 = s * s, cs = c * s;
  NonsecularPv ns;
  // 1 + 2n splits linearly into (1 + n) + n.
  ns.pp = -c2 * s2 * ((p.a_minus + p.b_minus) - (p.a_plus + p.b_plus));
  ns.zp = cs * (s2 * p.a_minus + c2 * p.b_plus);
  ns.zm = -cs * (s2 * p.b_minus + c2 * p.a_plus);
  ns.pz = -cs * (c2 * p.a_zero + s2 * p.b_zero);
  ns.mz = cs * (c2 * p.b_zero + s2 * p.a_zero);
  return ns;
}

}  // namespace

LambShift lamb_shift(const SpectralDensity& j, const Thermal& th,
                     const ControlField& field, const DressedBasis& basis,
                     const PvSettings& pv) {
  return lamb_from_primitives(pv_primitives(j, th, field, basis, pv), basis);
}

NonsecularPv nonsecular_pv_terms(const SpectralDensity& j, const Thermal& th,
                                 const ControlField& field,
                                 const DressedBasis& basis,
                                 const PvSettings& pv) {
  return nspv_from_primitives(pv_primitives(j, th, field, basis, pv), basis);
}

RateSet make_rate_set(const SpectralDensity& j, const Thermal& th,
                      const ControlField& field, const DressedBasis& basis,
                      const RateOptions& opts) {
  RateSet rs;
  rs.sb = sideband_rates(j, th, field, basis, opts);
  const SecularRates sec = secular_rates(rs.sb, basis);
  rs.sec_minus = sec.minus;
  rs.sec_plus = sec.plus;
  rs.sec_z = sec.z;
  const NonsecularRates ns = nonsecular_rates(rs.sb, basis);
  rs.ns_pp = ns.pp;
  rs.ns_zp = ns.zp;
  rs.ns_zm = ns.zm;
  rs.ns_pz = ns.pz;
  rs.ns_mz = ns.mz;
  if (opts.with_pv) {
    // The occupation entering the principal values follows the same
    // approximation as the rates: a uniform occupation freezes n(w) to a
    // constant, which scales the weight-1 integrals.
    const PvPrimitives p = [&] {
      std::optional<double> frozen = opts.n_fd;
      if (!frozen && opts.uniform_occupation)
        frozen = thermal_occupation(field.omega_0, th);
      if (!frozen) return pv_primitives(j, th, field, basis, opts.pv);
      PvPrimitives q = pv_primitives(j, Thermal(0.0), field, basis, opts.pv);
      const double n = *frozen;
      PvPrimitives out;
      out.a_plus = (1.0 + n) * q.a_plus;
      out.a_minus = (1.0 + n) * q.a_minus;
      out.a_zero = (1.0 + n) * q.a_zero;
      out.b_plus = n * q.a_plus;
      out.b_minus = n * q.a_minus;
      out.b_zero = n * q.a_zero;
      return out;
    }();
    const LambShift ls = lamb_from_primitives(p, basis);
    rs.lamb_plus = ls.s_plus;
    rs.lamb_minus = ls.s_minus;
    rs.lamb_z = ls.s_z;
    const NonsecularPv np = nspv_from_primitives(p, basis);
    rs.s_pp = np.pp;
    rs.s_zp = np.zp;
    rs.s_zm = np.zm;
    rs.s_pz = np.pz;
    rs.s_mz = np.mz;
  }
  return rs;
}

Sidebands fixed_x_sidebands(double x, double gamma0, double n_fd) {
  if (!(x >= 0)) throw ConfigError("fixed_x_sidebands: x must be >= 0");
  if (!(gamma0 >= 0)) throw ConfigError("fixed_x_sidebands: gamma0 must be >= 0");
  Sidebands sb;
  if (x == 1.0) {
    sb.gamma_minus = sb.gamma_plus = gamma0;
  } else if (x < 1.0) {
    sb.gamma_minus = 2.0 * x * gamma0;
    sb.gamma_plus = 2.0 * gamma0;
  } else {
    sb.gamma_minus = 2.0 * gamma0;
    sb.gamma_plus = 2.0 * gamma0 / x;
  }
  sb.gamma_zero = gamma0;
  sb.n_plus = sb.n_minus = sb.n_zero = n_fd;
  return sb;
}

RateSet rate_set_from_sidebands(const Sidebands& sb,
                                const DressedBasis& basis) {
  RateSet rs;
  rs.sb = sb;
  const SecularRates sec = secular_rates(sb, basis);
  rs.sec_minus = sec.minus;
  rs.sec_plus = sec.plus;
  rs.sec_z = sec.z;
  const NonsecularRates ns = nonsecular_rates(sb, basis);
  rs.ns_pp = ns.pp;
  rs.ns_zp = ns.zp;
  rs.ns_zm = ns.zm;
  rs.ns_pz = ns.pz;
  rs.ns_mz = ns.mz;
  return rs;
}

}  // namespace driqs
