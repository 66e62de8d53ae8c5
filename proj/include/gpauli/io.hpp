// Copyright 2026 The gpauli Authors
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

#include <memory>
#include <string>

#include <json.hpp>

#include "gpauli/channel.hpp"
#include "gpauli/dynamics.hpp"
#include "gpauli/mub.hpp"

namespace gpauli {

using Json = nlohmann::ordered_json;

// Complex numbers serialize as [re, im]; vectors as arrays of such pairs.
Json complex_vector_to_json(const ComplexVector& v);
ComplexVector complex_vector_from_json(const Json& j);

// {"dim", "convention", "bases": [{"index", "generator", "vectors": [[[re, im], ...], ...]}]}
Json mub_family_to_json(const MubFamily& family);

// CSV: alpha,k,beta,l,overlap,deviation
std::string overlaps_to_csv(const MubFamily& family);
Json overlaps_to_json(const MubFamily& family);

// {"dim", "probabilities", "eigenvalues", "cp_flag", "cp_margin"}
Json channel_to_json(const GenPauliChannel& channel);
// Accepts "eigenvalues" and/or "probabilities" (checked for consistency when
// both are present) and an optional "cp_flag" that must match the recomputed one.
GenPauliChannel channel_from_json(const Json& j);

// Fixed 17-significant-digit formatting, '.' separator, locale independent.
std::string format_csv_double(double x);

// Columns t, gamma_1..gamma_{d+1}, Gamma_1..Gamma_{d+1}, lambda_1..lambda_{d+1}.
std::string trajectory_to_csv(const Trajectory& traj);

Json verdict_to_json(const Verdict& v);
Json report_to_json(const DivisibilityReport& report);

}  // namespace gpauli
