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

#include "driqs/io.hpp"

#include <cstdio>

namespace driqs {

using nlohmann::json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json matrix_to_json(const Mat2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json matrix_to_json(const Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json field_to_json(const ControlField& f) {
  return json{{"delta", f.delta},
              {"omega", f.omega},
              {"phi", f.phi},
              {"omega_L", f.omega_L},
              {"omega_0", f.omega_0},
              {"rwa_ratio", f.rwa_ratio()}};
}

json basis_to_json(const DressedBasis& b) {
  return json{{"nu", b.nu}, {"theta", b.theta}, {"c", b.c}, {"s", b.s}};
}

json rate_set_to_json(const RateSet& r) {
  return json{
      {"gamma", {{"plus", r.sb.gamma_plus},
                 {"minus", r.sb.gamma_minus},
                 {"zero", r.sb.gamma_zero}}},
      {"n", {{"plus", r.sb.n_plus},
             {"minus", r.sb.n_minus},
             {"zero", r.sb.n_zero}}},
      {"secular", {{"minus", r.sec_minus}, {"plus", r.sec_plus}, {"z", r.sec_z}}},
      {"nonsecular", {{"pp", r.ns_pp},
                      {"zp", r.ns_zp},
                      {"zm", r.ns_zm},
                      {"pz", r.ns_pz},
                      {"mz", r.ns_mz}}},
      {"pv", {{"pp", r.s_pp},
              {"zp", r.s_zp},
              {"zm", r.s_zm},
              {"pz", r.s_pz},
              {"mz", r.s_mz}}},
      {"lamb", {{"plus", r.lamb_plus}, {"minus", r.lamb_minus}, {"z", r.lamb_z}}}};
}

json state_to_json(const QubitState& s) {
  const BlochVector r = bloch(s);
  return json{{"rho", matrix_to_json(s.rho())},
              {"bloch", {r.rx, r.ry, r.rz}},
              {"purity", s.purity()},
              {"physical", s.is_physical()}};
}

json liouvillian_to_json(const Liouvillian& l) {
  json j{{"kind", to_string(l.kind)},
         {"matrix", matrix_to_json(l.matrix)},
         {"field", field_to_json(l.params.field)},
         {"include_lamb", l.params.include_lamb}};
  if (l.params.basis) j["basis"] = basis_to_json(*l.params.basis);
  if (l.params.rates) j["rates"] = rate_set_to_json(*l.params.rates);
  if (l.kind == GeneratorKind::Fdme) {
    j["gamma_fd"] = l.params.gamma_fd;
    j["n_fd"] = l.params.n_fd;
  }
  return j;
}

namespace {
constexpr const char* kCrlf = "\r\n";

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << kCrlf;
}
}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  write_row(os, {"t", "rx", "ry", "rz", "rho_ee_re", "rho_eg_re", "rho_eg_im",
                 "physical"});
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& b = t.bloch[i];
    const auto& s = t.states[i];
    write_row(os, {fmt17(t.times[i]), fmt17(b.rx), fmt17(b.ry), fmt17(b.rz),
                   fmt17(s.rho_ee().real()), fmt17(s.rho_eg().real()),
                   fmt17(s.rho_eg().imag()), t.physical[i] ? "1" : "0"});
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  write_row(os, {"generator", "delta", "omega0", "theta", "omega_over_delta",
                 "phi", "x", "rx", "ry", "rz", "residual", "ellipsoid_defect",
                 "fidelity_vs_fd", "physical"});
  const std::string kind = to_string(r.config.kind);
  for (const auto& p : r.points) {
    write_row(os,
              {kind, fmt17(r.config.delta), fmt17(r.config.omega0),
               fmt17(p.theta), fmt17(p.omega_over_delta), fmt17(p.phi),
               fmt17(p.x_ratio), fmt17(p.r.rx), fmt17(p.r.ry), fmt17(p.r.rz),
               fmt17(p.residual), fmt17(p.ellipsoid_defect),
               fmt17(p.fidelity_vs_fd), p.physical ? "1" : "0"});
  }
}

void write_fidelity_map_csv(std::ostream& os, const FidelityMap& m) {
  write_row(os, {"log10_x", "x", "omega_over_delta", "n_fd", "fidelity"});
  const auto& omegas = m.config.omega_over_delta;
  const auto& xs = m.config.log10_x;
  for (std::size_t ix = 0; ix < xs.size(); ++ix) {
    for (std::size_t iw = 0; iw < omegas.size(); ++iw) {
      write_row(os, {fmt17(xs[ix]), fmt17(std::pow(10.0, xs[ix])),
                     fmt17(omegas[iw]), fmt17(m.config.n_fd),
                     fmt17(m.at(ix, iw))});
    }
  }
}

void write_compensation_csv(std::ostream& os,
                            const std::vector<CompensationPoint>& c,
                            double x) {
  write_row(os, {"x", "omega_over_delta", "n_fd", "defect"});
  for (const auto& p : c)
    write_row(os, {fmt17(x), fmt17(p.omega_over_delta), fmt17(p.n_fd),
                   fmt17(p.defect)});
}

namespace {
json sweep_config_to_json(const SweepConfig& c) {
  json j{{"generator", to_string(c.kind)},
         {"delta", c.delta},
         {"omega0", c.omega0},
         {"temperature", c.thermal.temperature},
         {"uniform_occupation", c.uniform_occupation},
         {"include_lamb", c.include_lamb},
         {"phis", c.phis}};
  if (c.n_fd) j["n_fd"] = *c.n_fd;
  if (c.gamma_fd) j["gamma_fd"] = *c.gamma_fd;
  if (c.fixed_x)
    j["fixed_x"] = {{"x", c.fixed_x->x},
                    {"gamma0", c.fixed_x->gamma0},
                    {"n_fd", c.fixed_x->n_fd}};
  if (c.spectral) {
    const auto& s = *c.spectral;
    switch (s.kind()) {
      case SpectralDensity::Kind::Flat:
        j["spectral"] = {{"kind", "flat"}, {"level", s.level()}};
        break;
      case SpectralDensity::Kind::Lorentzian:
        j["spectral"] = {{"kind", "lorentzian"},
                         {"gamma_l", s.gamma_l()},
                         {"lambda", s.lambda()},
                         {"omega_c", s.omega_c()}};
        break;
      case SpectralDensity::Kind::Tabulated:
        j["spectral"] = {{"kind", "tabulated"}};
        break;
    }
  }
  return j;
}
}  // namespace

json sweep_to_json(const SweepResult& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    pts.push_back(json{{"theta", p.theta},
                       {"omega_over_delta", p.omega_over_delta},
                       {"phi", p.phi},
                       {"x", p.x_ratio},
                       {"bloch", {p.r.rx, p.r.ry, p.r.rz}},
                       {"residual", p.residual},
                       {"ellipsoid_defect", p.ellipsoid_defect},
                       {"fidelity_vs_fd", p.fidelity_vs_fd},
                       {"physical", p.physical}});
  }
  return json{{"config", sweep_config_to_json(r.config)}, {"points", pts}};
}

json fidelity_map_to_json(const FidelityMap& m) {
  json rows = json::array();
  const auto& omegas = m.config.omega_over_delta;
  const auto& xs = m.config.log10_x;
  for (std::size_t ix = 0; ix < xs.size(); ++ix) {
    json row = json::array();
    for (std::size_t iw = 0; iw < omegas.size(); ++iw)
      row.push_back(m.at(ix, iw));
    rows.push_back(row);
  }
  return json{{"config", {{"omega_over_delta", omegas},
                          {"log10_x", xs},
                          {"delta", m.config.delta},
                          {"n_fd", m.config.n_fd},
                          {"phi", m.config.phi}}},
              {"fidelity", rows}};
}

}  // namespace driqs
