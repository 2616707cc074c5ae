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

// Command-line front end: scenario execution and plot-ready CSV/JSON output.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

#include "chronocycle/analysis.hpp"
#include "chronocycle/config.hpp"
#include "chronocycle/displacement.hpp"
#include "chronocycle/error_correction.hpp"
#include "chronocycle/gkp.hpp"
#include "chronocycle/hom.hpp"
#include "chronocycle/jsa.hpp"
#include "chronocycle/table.hpp"
#include "chronocycle/version.hpp"
#include "chronocycle/wigner.hpp"

namespace cc = chronocycle;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Overrides {
    std::string config_path;
    std::string output;
    std::string format;
    long long trials = -1;
    long long seed = -1;
    int threads = -1;
    int points = -1;
};

cc::ScenarioConfig resolve(const Overrides& o, const std::string& scenario) {
    cc::ScenarioConfig cfg;
    if (!o.config_path.empty()) {
        cfg = cc::load_config(o.config_path);
    } else {
        cfg = cc::parse_config(nlohmann::json::object());
    }
    cfg.scenario = scenario;
    if (!o.output.empty()) cfg.output_path = o.output;
    if (!o.format.empty()) cfg.format = o.format;
    if (o.trials >= 0) cfg.trials = o.trials;
    if (o.seed >= 0) cfg.master_seed = static_cast<std::uint64_t>(o.seed);
    if (o.threads >= 0) cfg.threads = o.threads;
    if (o.points >= 0) cfg.scan_points = o.points;
    if (cfg.threads <= 0) {
        const char* env = std::getenv("CHRONOCYCLE_THREADS");
        cfg.threads = env ? std::max(1, std::atoi(env)) : 1;
    }
    cfg.raw = cc::emit_config(cfg);
    if (cfg.format != "csv" && cfg.format != "json")
        throw cc::SimError(cc::ErrorCode::ConfigError, "format must be csv or json");
    return cfg;
}

cc::TableFormat table_format(const cc::ScenarioConfig& cfg) {
    return cfg.format == "json" ? cc::TableFormat::json : cc::TableFormat::csv;
}

cc::ResultTable new_table(const cc::ScenarioConfig& cfg, std::vector<std::string> cols) {
    cc::ResultTable t;
    t.columns = std::move(cols);
    t.config_hash = cfg.hash();
    t.artifact_version = cc::kVersion;
    return t;
}

cc::LogicalLabel parse_label(const std::string& s) {
    if (s == "zero" || s == "0") return cc::LogicalLabel::zero;
    if (s == "one" || s == "1") return cc::LogicalLabel::one;
    if (s == "plus" || s == "+") return cc::LogicalLabel::plus;
    if (s == "minus" || s == "-") return cc::LogicalLabel::minus;
    throw cc::SimError(cc::ErrorCode::ConfigError, "gkp.label must be zero|one|plus|minus");
}

cc::GkpBasis parse_basis(const std::string& s) {
    if (s == "frequency") return cc::GkpBasis::frequency;
    if (s == "time") return cc::GkpBasis::time;
    throw cc::SimError(cc::ErrorCode::ConfigError, "gkp.basis must be frequency|time");
}

std::vector<double> tau_axis(const cc::ScenarioConfig& cfg) {
    const double tau_rt = cfg.comb.round_trip_time();
    double lo = cfg.tau_min, hi = cfg.tau_max;
    int n = std::max(2, cfg.scan_points);
    if (lo == 0.0 && hi == 0.0) {
        // Auto window [-0.325, 2.275] * tau_rt with the point count snapped so
        // the dip lattice (multiples of tau_rt) falls exactly on samples: the
        // dips can be far narrower than any practical scan step.
        lo = -0.325 * tau_rt;
        hi = 2.275 * tau_rt;
        const int k = std::max(1, (n + 102) / 104);
        n = 104 * k + 1;  // step = tau_rt / (40 k)
    }
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
    return v;
}

int run_gkp_state(const cc::ScenarioConfig& cfg) {
    auto st = cc::physical_gkp(parse_label(cfg.gkp_label), cfg.comb, cfg.kappa, 8);
    const int teeth = cc::count_bright_teeth(st);
    const auto fs = cc::stabilizer_expectation(st, cc::StabilizerKind::frequency_stab);
    const auto ts = cc::stabilizer_expectation(st, cc::StabilizerKind::time_stab);
    auto [p0, p1] = cc::logical_readout(st, parse_basis(cfg.gkp_basis));

    auto t = new_table(cfg, {"omega_hz", "intensity", "phase_rad"});
    const auto& s = st.spectrum;
    for (int j = 0; j < s.grid.n_points; ++j) {
        t.rows.push_back({s.grid.omega(j) / kTwoPi, std::norm(s.amplitudes[j]),
                          std::arg(s.amplitudes[j])});
    }
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::printf(
        "gkp-state: %d bright teeth, stabilizers (%.6f, %.6f), readout p0=%.6f p1=%.6f -> %s\n",
        teeth, fs.real(), ts.real(), p0, p1, cfg.output_path.c_str());
    return 0;
}

int run_wigner(const cc::ScenarioConfig& cfg) {
    auto st = cc::physical_gkp(parse_label(cfg.gkp_label), cfg.comb, cfg.kappa, 8);
    const auto& s = st.spectrum;
    const int nt = cfg.grid_points > 0 ? cfg.grid_points : 257;
    const long long budget = static_cast<long long>(s.grid.n_points) * nt;
    if (budget > (1LL << 24))
        throw cc::SimError(cc::ErrorCode::BudgetExceeded,
                           "wigner map too large; reduce band_hz or grid_points");
    auto wg = cc::wigner(s, cc::natural_wigner_time_axis(s.grid, nt));

    auto t = new_table(cfg, {"omega_hz", "t_s", "wigner"});
    const int stride = std::max(1, s.grid.n_points / 1024);
    for (int i = 0; i < s.grid.n_points; i += stride)
        for (int l = 0; l < nt; ++l)
            t.rows.push_back({wg.omega_axis.omega(i) / kTwoPi, wg.t_axis.t(l), wg.values.at(i, l)});
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::printf("wigner: %zu samples (stride %d) -> %s\n", t.rows.size(), stride,
                cfg.output_path.c_str());
    return 0;
}

cc::JsaModel build_source(const cc::ScenarioConfig& cfg) {
    if (cfg.comb.pump_width <= 1e-6 * cfg.comb.phasematch_width)
        return cc::JsaModel(cc::build_degenerate_jsa(cfg.comb, cfg.cavity, 16, 4.0));
    const int n = cfg.grid_points > 0 ? cfg.grid_points : 256;
    const double half = 4.5 * std::max(cfg.comb.phasematch_width, cfg.comb.pump_width);
    auto grid = cc::make_centered_grid(half, n, cfg.comb.unit_mode);
    return cc::JsaModel(cc::build_jsa(cfg.comb, cfg.cavity, grid, grid));
}

int run_jsa(const cc::ScenarioConfig& cfg) {
    auto model = build_source(cfg);
    if (std::holds_alternative<cc::DegenerateJsa>(model)) {
        const auto& d = std::get<cc::DegenerateJsa>(model);
        auto t = new_table(cfg, {"nu_hz", "re", "im"});
        for (int k = 0; k < d.nu_grid.n_points; ++k)
            t.rows.push_back({d.nu_grid.omega(k) / kTwoPi, d.amplitudes[k].real(),
                              d.amplitudes[k].imag()});
        cc::emit_table(t, table_format(cfg), cfg.output_path);
        std::printf("jsa: 1-D ridge amplitude, %d samples -> %s\n", d.nu_grid.n_points,
                    cfg.output_path.c_str());
        return 0;
    }
    const auto& j = std::get<cc::JointSpectralAmplitude>(model);
    auto t = new_table(cfg, {"omega_s_hz", "omega_i_hz", "re", "im"});
    for (int a = 0; a < j.s_grid.n_points; ++a)
        for (int b = 0; b < j.i_grid.n_points; ++b)
            t.rows.push_back({j.s_grid.omega(a) / kTwoPi, j.i_grid.omega(b) / kTwoPi,
                              j.amplitudes.at(a, b).real(), j.amplitudes.at(a, b).imag()});
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::printf("jsa: %dx%d grid, ellipticity %.4f -> %s\n", j.s_grid.n_points, j.i_grid.n_points,
                cc::ellipticity(cfg.comb), cfg.output_path.c_str());
    return 0;
}

int run_jti(const cc::ScenarioConfig& cfg) {
    auto model = build_source(cfg);
    if (std::holds_alternative<cc::DegenerateJsa>(model)) {
        const auto& d = std::get<cc::DegenerateJsa>(model);
        auto prof = cc::degenerate_jti_profile(d);
        const double period = cc::estimate_period(prof.density, prof.u_axis.spacing());
        auto t = new_table(cfg, {"t_diff_s", "density"});
        for (int k = 0; k < prof.u_axis.n_points; ++k)
            t.rows.push_back({prof.u_axis.t(k), prof.density[k]});
        cc::emit_table(t, table_format(cfg), cfg.output_path);
        std::printf("jti: difference-time profile, period %.6g ps -> %s\n", period * 1e12,
                    cfg.output_path.c_str());
        return 0;
    }
    const auto& j = std::get<cc::JointSpectralAmplitude>(model);
    auto intensity = cc::jti(j);
    auto t = new_table(cfg, {"t_s_s", "t_i_s", "density"});
    const int n = intensity.values.rows;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t.rows.push_back(
                {intensity.t_s_axis.t(a), intensity.t_i_axis.t(b), intensity.values.at(a, b)});
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::vector<double> along_diff;
    for (int k = 0; k < n; ++k) along_diff.push_back(intensity.values.at(k, n - 1 - k));
    const double period = cc::estimate_period(along_diff, 2.0 * intensity.t_s_axis.spacing());
    std::printf("jti: %dx%d grid, difference-axis period %.6g ps -> %s\n", n, n, period * 1e12,
                cfg.output_path.c_str());
    return 0;
}

int run_hom_scan(const cc::ScenarioConfig& cfg) {
    auto model = build_source(cfg);
    const auto taus = tau_axis(cfg);
    std::optional<cc::FilterSpec> filter;
    if (!cfg.filters.empty()) filter = cfg.filters.front();
    auto scan = cc::coincidence_scan(model, taus, filter);

    const double tau_rt = cfg.comb.round_trip_time();
    double central = 0.0, secondary = 0.0;
    try {
        central = cc::dip_visibility(scan, 0.0, 0.9 * tau_rt);
    } catch (const cc::SimError&) {
    }
    try {
        secondary = cc::dip_visibility(scan, tau_rt, 0.9 * tau_rt);
    } catch (const cc::SimError&) {
    }

    auto t = new_table(cfg, {"tau_s", "coincidence", "secondary_visibility"});
    for (size_t i = 0; i < taus.size(); ++i)
        t.rows.push_back({taus[i], scan.coincidence[i], secondary});
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::printf("hom-scan: %zu points, central V=%.4f, secondary V=%.4f -> %s\n", taus.size(),
                central, secondary, cfg.output_path.c_str());
    return 0;
}

int run_visibility_sweep(const cc::ScenarioConfig& cfg) {
    if (cfg.cavity.kind != cc::CavityKind::fabry_perot)
        throw cc::SimError(cc::ErrorCode::ConfigError,
                           "visibility-sweep requires cavity.kind = fabry_perot");
    auto points =
        cc::visibility_vs_reflectivity(cfg.comb, cfg.cavity, cfg.r_grid, cfg.filters, cfg.threads);
    auto t = new_table(cfg, {"r", "filter_bandwidth_hz", "visibility", "tau_at_min_s",
                             "coincidence_min"});
    for (const auto& p : points)
        t.rows.push_back({p.reflectivity, p.filter_bandwidth / kTwoPi, p.visibility, p.tau_at_min,
                          p.coincidence_min});
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::printf("visibility-sweep: %zu points (%zu r x %zu filters) -> %s\n", points.size(),
                cfg.r_grid.size(), cfg.filters.size(), cfg.output_path.c_str());
    return 0;
}

int run_ec_mc(const cc::ScenarioConfig& cfg) {
    auto st = cc::ec_monte_carlo(cfg.comb, cfg.noise, cfg.trials, cfg.master_seed, cfg.threads);
    auto t = new_table(cfg, {"trials", "successes", "success_rate", "residual_mean_s",
                             "residual_variance_s2", "success_residual_mean_s",
                             "success_residual_variance_s2", "delta_squared_s2",
                             "posterior_consistency"});
    t.rows.push_back({static_cast<double>(st.n_trials), static_cast<double>(st.successes),
                      st.success_rate, st.residual_mean, st.residual_variance,
                      st.success_residual_mean, st.success_residual_variance, st.delta_squared,
                      st.posterior_consistency});
    cc::emit_table(t, table_format(cfg), cfg.output_path);
    std::printf(
        "ec-mc: %lld trials, success %.6f, success-conditioned var %.6g (delta^2 %.6g) -> %s\n",
        st.n_trials, st.success_rate, st.success_residual_variance, st.delta_squared,
        cfg.output_path.c_str());
    return 0;
}

int run_selftest() {
    int passed = 0, failed = 0;
    auto report = [&](const char* name, bool ok) {
        std::printf("%s %s\n", ok ? "ok  " : "FAIL", name);
        (ok ? passed : failed)++;
    };

    {  // Weyl phase on random states.
        cc::FrequencyGrid g{-14.0, 14.0, 1024, cc::UnitMode::normalized};
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> mu_d(-1.0, 1.0), tau_d(-30.0, 30.0), c_d(-3.0, 3.0);
        bool ok = true;
        for (int i = 0; i < 10; ++i) {
            const double c0 = c_d(rng);
            auto s = cc::normalize(cc::sample_spectrum(g, [&](double w) {
                const double x = w - c0;
                return cc::complexd(std::exp(-0.25 * x * x), 0.0);
            }));
            const double mu = mu_d(rng), tau = tau_d(rng);
            auto lhs = cc::shift_frequency(cc::shift_time(s, tau), mu);
            auto rhs = cc::shift_time(cc::shift_frequency(s, mu), tau);
            for (auto& a : rhs.amplitudes) a *= std::polar(1.0, mu * tau);
            ok = ok && std::abs(cc::inner_product(lhs, rhs) - cc::complexd(1.0, 0.0)) < 1e-9;
        }
        report("weyl-phase", ok);
    }
    {  // Wigner marginals of a gaussian state.
        cc::FrequencyGrid g{-10.0, 10.0, 512, cc::UnitMode::normalized};
        auto s = cc::normalize(cc::sample_spectrum(
            g, [](double w) { return cc::complexd(std::exp(-0.5 * w * w), 0.0); }));
        auto wg = cc::wigner(s, cc::natural_wigner_time_axis(g, 512));
        auto spectral = cc::marginal(wg, cc::MarginalAxis::time);
        double num = 0.0, den = 0.0;
        for (int j = 0; j < g.n_points; ++j) {
            const double d = spectral[j] - std::norm(s.amplitudes[j]);
            num += d * d;
            den += std::norm(s.amplitudes[j]) * std::norm(s.amplitudes[j]);
        }
        report("wigner-marginals", std::sqrt(num / den) < 1e-6);
    }
    {  // HOM numeric vs closed form.
        cc::CombParams c;
        c.fsr = kTwoPi;
        c.tooth_width = 0.05 * c.fsr;
        c.pump_width = 0.0;
        c.phasematch_width = 6.0 * c.fsr;
        c.peak_count = 20;
        c.unit_mode = cc::UnitMode::normalized;
        cc::CavityModel cav;
        cav.kind = cc::CavityKind::gaussian_comb;
        cav.comb = c;
        auto src = cc::build_degenerate_jsa(c, cav, 24, 6.0);
        const double tau_rt = c.round_trip_time();
        std::vector<double> taus(65);
        for (int i = 0; i <= 64; ++i) taus[i] = -1.3 * tau_rt + 2.6 * tau_rt * i / 64.0;
        auto scan = cc::coincidence_scan(cc::JsaModel(src), taus);
        bool ok = true;
        for (int i = 0; i <= 64; ++i)
            ok = ok && std::abs(scan.coincidence[i] - cc::coincidence_analytic(c, taus[i])) < 1e-3;
        report("hom-analytic", ok);
    }
    {  // Posterior variance against the Monte Carlo.
        cc::CombParams c;
        c.fsr = kTwoPi;
        c.tooth_width = 0.05 * c.fsr;
        c.phasematch_width = 8.0 * c.fsr;
        c.peak_count = 10;
        c.unit_mode = cc::UnitMode::normalized;
        cc::NoiseModel n;
        n.kind = cc::NoiseKind::gaussian;
        n.time_width_signal = 0.04;
        n.time_width_idler = 0.03;
        n.freq_width = 0.15;
        auto st = cc::ec_monte_carlo(c, n, 50000, 11);
        report("posterior-variance", std::abs(st.posterior_consistency) < 0.05);
    }
    {  // Monte Carlo determinism across thread counts.
        cc::CombParams c;
        c.fsr = kTwoPi;
        c.tooth_width = 0.05 * c.fsr;
        c.phasematch_width = 8.0 * c.fsr;
        c.peak_count = 10;
        c.unit_mode = cc::UnitMode::normalized;
        cc::NoiseModel n;
        n.kind = cc::NoiseKind::gaussian;
        n.time_width_signal = 0.05;
        n.time_width_idler = 0.02;
        n.freq_width = 0.2;
        auto a = cc::ec_monte_carlo(c, n, 10000, 3, 1);
        auto b = cc::ec_monte_carlo(c, n, 10000, 3, 4);
        report("ec-determinism", a.success_residual_variance == b.success_residual_variance &&
                                     a.residual_mean == b.residual_mean);
    }

    std::printf("selftest: %d passed, %d failed\n", passed, failed);
    return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chronocycle: time-frequency comb and grid-state simulations"};
    app.require_subcommand(1);

    Overrides o;
    app.add_option("--config", o.config_path, "JSON scenario configuration");
    app.add_option("--output", o.output, "output file path");
    app.add_option("--format", o.format, "csv or json");
    app.add_option("--trials", o.trials, "Monte Carlo trial count");
    app.add_option("--seed", o.seed, "master seed");
    app.add_option("--threads", o.threads, "worker thread count (results do not depend on it)");
    app.add_option("--points", o.points, "scan point count");

    auto* sc_wigner = app.add_subcommand("wigner", "chronocyclic Wigner map of a grid state");
    auto* sc_gkp = app.add_subcommand("gkp-state", "sampled physical grid state");
    auto* sc_jsa = app.add_subcommand("jsa", "joint spectral amplitude");
    auto* sc_jti = app.add_subcommand("jti", "joint temporal intensity");
    auto* sc_hom = app.add_subcommand("hom-scan", "coincidence scan against the gate delay");
    auto* sc_sweep = app.add_subcommand("visibility-sweep", "replica visibility vs reflectivity");
    auto* sc_ec = app.add_subcommand("ec-mc", "measurement-based correction Monte Carlo");
    auto* sc_self = app.add_subcommand("selftest", "run the built-in invariant checks");
    for (auto* sc : {sc_wigner, sc_gkp, sc_jsa, sc_jti, sc_hom, sc_sweep, sc_ec, sc_self})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_self->parsed()) return run_selftest();
        if (sc_wigner->parsed()) return run_wigner(resolve(o, "wigner"));
        if (sc_gkp->parsed()) return run_gkp_state(resolve(o, "gkp-state"));
        if (sc_jsa->parsed()) return run_jsa(resolve(o, "jsa"));
        if (sc_jti->parsed()) return run_jti(resolve(o, "jti"));
        if (sc_hom->parsed()) return run_hom_scan(resolve(o, "hom-scan"));
        if (sc_sweep->parsed()) return run_visibility_sweep(resolve(o, "visibility-sweep"));
        if (sc_ec->parsed()) return run_ec_mc(resolve(o, "ec-mc"));
    } catch (const cc::SimError& e) {
        std::fprintf(stderr, "error: %s (config: %s)\n", e.what(),
                     o.config_path.empty() ? "<defaults>" : o.config_path.c_str());
        return e.is_config_error() ? 1 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
