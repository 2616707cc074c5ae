// Copyright 2026 The Chronocycle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHRONOCYCLE_CONFIG_HPP
#define CHRONOCYCLE_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chronocycle/cavity.hpp"
#include "chronocycle/error_correction.hpp"
#include "chronocycle/hom.hpp"

namespace chronocycle {

// Scenario configuration: one JSON document per run. All frequencies are
// ordinary frequencies in Hz with an _hz suffix (the library converts to
// angular rad/s at this boundary); all times are seconds with an _s suffix.

struct ScenarioConfig {
    std::string scenario;

    CombParams comb;          // converted to rad/s
    double band = 0.0;        // rad/s; spectral envelope span (gkp-state, jsa)
    double kappa = 0.0;       // s; 0 means "derive from band"
    CavityModel cavity;

    NoiseModel noise;
    long long trials = 10000;
    std::uint64_t master_seed = 1;
    int threads = 1;

    int scan_points = 401;
    double tau_min = 0.0, tau_max = 0.0;  // s; 0,0 means "auto window"

    int grid_points = 0;            // wigner/jsa resolution override
    int gkp_truncation = 4;         // d
    std::string gkp_label = "plus";
    std::string gkp_basis = "frequency";

    std::vector<double> r_grid;
    std::vector<std::optional<FilterSpec>> filters;

    std::string output_path = "out.csv";
    std::string format = "csv";

    nlohmann::json raw;  // canonical document, hashed into every output

    std::string hash() const;
};

/// Parses and validates; throws SimError(ConfigError) with the offending path.
ScenarioConfig parse_config(const nlohmann::json& doc);

/// Reads a JSON file and parses it.
ScenarioConfig load_config(const std::string& path);

/// Round-trips a config back to canonical JSON (parse(emit(c)) == c).
nlohmann::json emit_config(const ScenarioConfig& c);

}  // namespace chronocycle

#endif
