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

#include <json.hpp>
#include <ostream>
#include <string>

#include "driqs/analysis.hpp"
#include "driqs/dynamics.hpp"
#include "driqs/liouvillian.hpp"

namespace driqs {

/// Shortest round-trip decimal representation (17 significant digits).
std::string fmt17(double x);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json matrix_to_json(const Mat2& m);
nlohmann::json matrix_to_json(const Mat4& m);

nlohmann::json field_to_json(const ControlField& f);
nlohmann::json basis_to_json(const DressedBasis& b);
nlohmann::json rate_set_to_json(const RateSet& r);
nlohmann::json state_to_json(const QubitState& s);

/// 4x4 complex matrix, row-major, {re, im} pairs, plus the parameter
/// snapshot the generator was built from.
nlohmann::json liouvillian_to_json(const Liouvillian& l);

// CSV output is RFC 4180: comma separated, CRLF records, '.' decimal
// separator, 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);
void write_sweep_csv(std::ostream& os, const SweepResult& r);
void write_fidelity_map_csv(std::ostream& os, const FidelityMap& m);
void write_compensation_csv(std::ostream& os,
                            const std::vector<CompensationPoint>& c, double x);

nlohmann::json sweep_to_json(const SweepResult& r);
nlohmann::json fidelity_map_to_json(const FidelityMap& m);

}  // namespace driqs
