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

#include "chronocycle/config.hpp"

#include <fstream>

#include "chronocycle/gkp.hpp"
#include "chronocycle/table.hpp"

namespace chronocycle {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double num_at(const nlohmann::json& j, const std::string& key, double fallback,
              const std::string& path) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw SimError(ErrorCode::ConfigError, path + "." + key + " must be a number");
    return j.at(key).get<double>();
}

std::string str_at(const nlohmann::json& j, const std::string& key, const std::string& fallback,
                   const std::string& path) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string())
        throw SimError(ErrorCode::ConfigError, path + "." + key + " must be a string");
    return j.at(key).get<std::string>();
}

}  // namespace

std::string ScenarioConfig::hash() const {
    // The destination (path/format) does not alter the computed content, so
    // it stays out of the hash: rerunning into another file reproduces it.
    nlohmann::json redacted = raw;
    redacted.erase("output");
    return fnv1a_hex(redacted.dump());
}

ScenarioConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw SimError(ErrorCode::ConfigError, "config root must be an object");
    ScenarioConfig c;
    c.scenario = str_at(doc, "scenario", "", "config");

    const nlohmann::json comb = doc.contains("comb") ? doc.at("comb") : nlohmann::json::object();
    c.comb.fsr = kTwoPi * num_at(comb, "fsr_hz", 19.2e9, "comb");
    c.comb.pump_width = kTwoPi * num_at(comb, "pump_width_hz", 100.0e3, "comb");
    c.comb.phasematch_width = kTwoPi * num_at(comb, "phasematch_width_hz", 3.85e12, "comb");
    c.comb.pump_center = kTwoPi * num_at(comb, "pump_center_hz", 0.0, "comb");
    c.comb.peak_count = static_cast<int>(num_at(comb, "peak_count", 20, "comb"));

    c.band = kTwoPi * num_at(doc, "band_hz", 10.9e12, "config");
    c.kappa = num_at(doc, "kappa_s", 0.0, "config");

    const nlohmann::json cav = doc.contains("cavity") ? doc.at("cavity") : nlohmann::json::object();
    const std::string kind = str_at(cav, "kind", "gaussian_comb", "cavity");
    if (kind == "gaussian_comb")
        c.cavity.kind = CavityKind::gaussian_comb;
    else if (kind == "fabry_perot")
        c.cavity.kind = CavityKind::fabry_perot;
    else
        throw SimError(ErrorCode::ConfigError, "cavity.kind must be gaussian_comb or fabry_perot");
    c.cavity.reflectivity = num_at(cav, "reflectivity", 0.3, "cavity");
    const bool fp = (c.cavity.kind == CavityKind::fabry_perot);
    c.cavity.dispersion =
        num_at(cav, "dispersion_s2", fp ? kDeviceDispersionBeta2 : 0.0, "cavity");
    c.cavity.biref_fsr_offset =
        kTwoPi * num_at(cav, "birefringence_fsr_offset_hz", fp ? kDeviceBirefFsrOffsetHz : 0.0,
                        "cavity");

    const double tooth_hz = num_at(comb, "tooth_width_hz", 0.0, "comb");
    if (tooth_hz > 0.0)
        c.comb.tooth_width = kTwoPi * tooth_hz;
    else if (c.cavity.kind == CavityKind::fabry_perot)
        c.comb.tooth_width = equivalent_gaussian_tooth_width(c.comb.fsr, c.cavity.reflectivity);
    else
        c.comb.tooth_width = c.comb.fsr / 20.0;
    c.cavity.comb = c.comb;

    if (c.kappa <= 0.0 && c.band > 0.0)
        c.kappa = kappa_for_tooth_count(c.comb, c.band / c.comb.fsr);

    const nlohmann::json noise = doc.contains("noise") ? doc.at("noise") : nlohmann::json::object();
    const std::string nkind = str_at(noise, "kind", "gaussian", "noise");
    if (nkind == "gaussian")
        c.noise.kind = NoiseKind::gaussian;
    else if (nkind == "dirac")
        c.noise.kind = NoiseKind::dirac;
    else
        throw SimError(ErrorCode::ConfigError, "noise.kind must be gaussian or dirac");
    const double tau_rt = c.comb.round_trip_time();
    c.noise.time_width_signal = num_at(noise, "time_width_signal_s", 0.05 * tau_rt, "noise");
    c.noise.time_width_idler = num_at(noise, "time_width_idler_s", 0.02 * tau_rt, "noise");
    c.noise.freq_width = kTwoPi * num_at(noise, "freq_width_hz", 0.0, "noise");
    c.noise.dirac_t = num_at(noise, "dirac_t_s", 0.0, "noise");
    c.noise.dirac_t_prime = num_at(noise, "dirac_t_prime_s", 0.0, "noise");
    c.noise.dirac_omega = kTwoPi * num_at(noise, "dirac_omega_hz", 0.0, "noise");
    c.noise.dirac_omega_prime = kTwoPi * num_at(noise, "dirac_omega_prime_hz", 0.0, "noise");

    c.trials = static_cast<long long>(num_at(doc, "trials", 10000, "config"));
    c.master_seed = static_cast<std::uint64_t>(num_at(doc, "master_seed", 1, "config"));
    c.threads = static_cast<int>(num_at(doc, "threads", 1, "config"));

    const nlohmann::json scan = doc.contains("scan") ? doc.at("scan") : nlohmann::json::object();
    c.scan_points = static_cast<int>(num_at(scan, "points", 401, "scan"));
    c.tau_min = num_at(scan, "tau_min_s", 0.0, "scan");
    c.tau_max = num_at(scan, "tau_max_s", 0.0, "scan");

    c.grid_points = static_cast<int>(num_at(doc, "grid_points", 0, "config"));
    const nlohmann::json gkp = doc.contains("gkp") ? doc.at("gkp") : nlohmann::json::object();
    c.gkp_truncation = static_cast<int>(num_at(gkp, "truncation", 4, "gkp"));
    c.gkp_label = str_at(gkp, "label", "plus", "gkp");
    c.gkp_basis = str_at(gkp, "basis", "frequency", "gkp");

    const nlohmann::json sweep = doc.contains("sweep") ? doc.at("sweep") : nlohmann::json::object();
    if (sweep.contains("r_grid")) {
        for (const auto& v : sweep.at("r_grid")) c.r_grid.push_back(v.get<double>());
    } else {
        for (int i = 1; i <= 9; ++i) c.r_grid.push_back(0.1 * i);
    }
    const std::string fshape = str_at(sweep, "filter_shape", "rect", "sweep");
    std::vector<double> bands_hz;
    if (sweep.contains("filter_bandwidths_hz"))
        for (const auto& v : sweep.at("filter_bandwidths_hz")) bands_hz.push_back(v.get<double>());
    else
        bands_hz = {0.0};
    for (double b : bands_hz) {
        if (b <= 0.0) {
            c.filters.push_back(std::nullopt);
        } else {
            FilterSpec f;
            f.center = 0.0;
            f.bandwidth = kTwoPi * b;
            f.shape = fshape == "gaussian" ? FilterSpec::Shape::gaussian : FilterSpec::Shape::rect;
            c.filters.push_back(f);
        }
    }

    const nlohmann::json out = doc.contains("output") ? doc.at("output") : nlohmann::json::object();
    c.output_path = str_at(out, "path", "out.csv", "output");
    c.format = str_at(out, "format", "csv", "output");
    if (c.format != "csv" && c.format != "json")
        throw SimError(ErrorCode::ConfigError, "output.format must be csv or json");

    c.raw = emit_config(c);
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SimError(ErrorCode::ConfigError, "cannot open config: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SimError(ErrorCode::ConfigError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse_config(doc);
}

nlohmann::json emit_config(const ScenarioConfig& c) {
    nlohmann::json j;
    j["scenario"] = c.scenario;
    j["comb"] = {{"fsr_hz", c.comb.fsr / kTwoPi},
                 {"tooth_width_hz", c.comb.tooth_width / kTwoPi},
                 {"pump_width_hz", c.comb.pump_width / kTwoPi},
                 {"phasematch_width_hz", c.comb.phasematch_width / kTwoPi},
                 {"pump_center_hz", c.comb.pump_center / kTwoPi},
                 {"peak_count", c.comb.peak_count}};
    j["band_hz"] = c.band / kTwoPi;
    j["kappa_s"] = c.kappa;
    j["cavity"] = {{"kind", c.cavity.kind == CavityKind::fabry_perot ? "fabry_perot" : "gaussian_comb"},
                   {"reflectivity", c.cavity.reflectivity},
                   {"dispersion_s2", c.cavity.dispersion},
                   {"birefringence_fsr_offset_hz", c.cavity.biref_fsr_offset / kTwoPi}};
    j["noise"] = {{"kind", c.noise.kind == NoiseKind::gaussian ? "gaussian" : "dirac"},
                  {"time_width_signal_s", c.noise.time_width_signal},
                  {"time_width_idler_s", c.noise.time_width_idler},
                  {"freq_width_hz", c.noise.freq_width / kTwoPi},
                  {"dirac_t_s", c.noise.dirac_t},
                  {"dirac_t_prime_s", c.noise.dirac_t_prime},
                  {"dirac_omega_hz", c.noise.dirac_omega / kTwoPi},
                  {"dirac_omega_prime_hz", c.noise.dirac_omega_prime / kTwoPi}};
    j["trials"] = c.trials;
    j["master_seed"] = c.master_seed;
    // threads is advisory and never changes results, so it stays out of the
    // canonical document: identical runs hash identically at any thread count.
    j["scan"] = {{"points", c.scan_points}, {"tau_min_s", c.tau_min}, {"tau_max_s", c.tau_max}};
    j["grid_points"] = c.grid_points;
    j["gkp"] = {{"truncation", c.gkp_truncation}, {"label", c.gkp_label}, {"basis", c.gkp_basis}};
    nlohmann::json bands = nlohmann::json::array();
    for (const auto& f : c.filters) bands.push_back(f ? f->bandwidth / kTwoPi : 0.0);
    std::string fshape = "rect";
    for (const auto& f : c.filters)
        if (f && f->shape == FilterSpec::Shape::gaussian) fshape = "gaussian";
    j["sweep"] = {{"r_grid", c.r_grid}, {"filter_bandwidths_hz", bands}, {"filter_shape", fshape}};
    j["output"] = {{"path", c.output_path}, {"format", c.format}};
    return j;
}

}  // namespace chronocycle
