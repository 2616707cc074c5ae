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

#include "chronocycle/jsa.hpp"

#include <cmath>

#include "chronocycle/fft.hpp"

namespace chronocycle {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double gaussian(double x, double width) {
    const double u = x / width;
    return std::exp(-0.5 * u * u);
}

double tooth_scale(const CavityModel& cavity) {
    return cavity.kind == CavityKind::gaussian_comb
               ? cavity.comb.tooth_width
               : equivalent_gaussian_tooth_width(cavity.comb.fsr, cavity.reflectivity);
}

}  // namespace

double JointSpectralAmplitude::norm() const {
    const auto ws = trapezoid_weights(s_grid.n_points, s_grid.spacing());
    const auto wi = trapezoid_weights(i_grid.n_points, i_grid.spacing());
    double acc = 0.0;
    for (int a = 0; a < s_grid.n_points; ++a)
        for (int b = 0; b < i_grid.n_points; ++b)
            acc += ws[a] * wi[b] * std::norm(amplitudes.at(a, b));
    return std::sqrt(acc);
}

double DegenerateJsa::norm() const {
    const auto w = trapezoid_weights(nu_grid.n_points, nu_grid.spacing());
    double acc = 0.0;
    for (int j = 0; j < nu_grid.n_points; ++j) acc += w[j] * std::norm(amplitudes[j]);
    return std::sqrt(acc);
}

JointSpectralAmplitude build_jsa(const CombParams& params, const CavityModel& cavity,
                                 const FrequencyGrid& s_grid, const FrequencyGrid& i_grid) {
    params.validate();
    cavity.validate();
    s_grid.validate();
    i_grid.validate();
    if (!(params.pump_width > 0.0))
        throw SimError(ErrorCode::InvalidArgument,
                       "build_jsa needs pump_width > 0; use build_degenerate_jsa for the ridge limit");

    const double tooth = tooth_scale(cavity);
    if (s_grid.spacing() > tooth || i_grid.spacing() > tooth)
        throw SimError(ErrorCode::GridTooCoarse, "grid spacing does not resolve the cavity teeth");

    const CavityModel cav_s = signal_cavity(cavity);
    const CavityModel cav_i = idler_cavity(cavity);

    JointSpectralAmplitude j;
    j.s_grid = s_grid;
    j.i_grid = i_grid;
    j.params = params;
    j.cavity = cavity;
    j.amplitudes = Array2D<complexd>(s_grid.n_points, i_grid.n_points);

    std::vector<complexd> fs(s_grid.n_points), fi(i_grid.n_points);
    for (int a = 0; a < s_grid.n_points; ++a) fs[a] = cavity_function(cav_s, s_grid.omega(a));
    for (int b = 0; b < i_grid.n_points; ++b) fi[b] = cavity_function(cav_i, i_grid.omega(b));

    const double half_pump = 0.5 * params.pump_center;
    for (int a = 0; a < s_grid.n_points; ++a) {
        const double ws = s_grid.omega(a);
        for (int b = 0; b < i_grid.n_points; ++b) {
            const double wi = i_grid.omega(b);
            const double wplus = 0.5 * (ws + wi);
            const double wminus = 0.5 * (ws - wi);
            j.amplitudes.at(a, b) = gaussian(wplus - half_pump, params.pump_width) *
                                    gaussian(wminus, params.phasematch_width) * fs[a] * fi[b];
        }
    }

    // Boundary ring energy (unnormalized): grid adequacy.
    double total = 0.0, ring = 0.0;
    for (int a = 0; a < s_grid.n_points; ++a)
        for (int b = 0; b < i_grid.n_points; ++b) {
            const double e = std::norm(j.amplitudes.at(a, b));
            total += e;
            if (a == 0 || b == 0 || a == s_grid.n_points - 1 || b == i_grid.n_points - 1) ring += e;
        }
    if (!(total > 0.0)) throw SimError(ErrorCode::ZeroState, "JSA vanished on the given grids");
    if (ring / total > 1e-3)
        throw SimError(ErrorCode::EnvelopeClipped, "more than 1e-3 of the energy on the grid edge");

    const double n = j.norm();
    for (auto& v : j.amplitudes.data) v /= n;
    return j;
}

DegenerateJsa build_degenerate_jsa(const CombParams& params, const CavityModel& cavity,
                                   int points_per_tooth, double envelope_sigmas) {
    params.validate();
    cavity.validate();
    if (!(params.phasematch_width > 0.0))
        throw SimError(ErrorCode::InvalidArgument, "phasematch_width must be positive");
    if (points_per_tooth < 4)
        throw SimError(ErrorCode::GridTooCoarse, "points_per_tooth must be at least 4");
    if (!params.pump_on_lattice())
        throw SimError(ErrorCode::BadPumpCenter, "degenerate builder needs the pump on the comb lattice");

    // Teeth of g(nu) have std sqrt(2)*tooth in nu (two cavity factors of std
    // 2*tooth each); sample the narrower of that and the envelope.
    const double tooth = tooth_scale(cavity);
    const double tooth_nu = std::sqrt(2.0) * tooth;
    const double dnu_wanted = tooth_nu / points_per_tooth;
    const long long per_fsr = std::max<long long>(
        4, static_cast<long long>(std::ceil(params.fsr / dnu_wanted)));
    const double dnu = params.fsr / static_cast<double>(per_fsr);

    // Envelope support: f-(nu/2) = exp(-nu^2 / (8 dw-^2)).
    const double nu_max =
        2.0 * envelope_sigmas * std::sqrt(2.0) * params.phasematch_width + 4.0 * params.fsr;
    long long half = static_cast<long long>(std::ceil(nu_max / dnu));
    if (2 * half > (1LL << 26))
        throw SimError(ErrorCode::BudgetExceeded, "degenerate grid would exceed 2^26 points");
    const int n = static_cast<int>(2 * half);

    DegenerateJsa j;
    j.nu_grid = make_centered_grid(0.5 * n * dnu, n, params.unit_mode);
    j.params = params;
    j.cavity = cavity;
    j.amplitudes.resize(n);

    const CavityModel cav_s = signal_cavity(cavity);
    const CavityModel cav_i = idler_cavity(cavity);
    const double wp = params.pump_center;
    for (int k = 0; k < n; ++k) {
        const double nu = j.nu_grid.omega(k);
        j.amplitudes[k] = gaussian(0.5 * nu, params.phasematch_width) *
                          cavity_function(cav_s, 0.5 * (wp + nu)) *
                          cavity_function(cav_i, 0.5 * (wp - nu));
    }
    const double nrm = j.norm();
    if (!(nrm > 0.0)) throw SimError(ErrorCode::ZeroState, "degenerate amplitude vanished");
    for (auto& v : j.amplitudes) v /= nrm;
    return j;
}

JsaModel build_jsa_model(const CombParams& params, const CavityModel& cavity,
                         const FrequencyGrid& s_grid, const FrequencyGrid& i_grid) {
    if (params.pump_width <= 1e-9 * params.phasematch_width)
        return build_degenerate_jsa(params, cavity);
    return build_jsa(params, cavity, s_grid, i_grid);
}

JointIntensityGrid jsi(const JointSpectralAmplitude& j) {
    JointIntensityGrid out;
    out.time_domain = false;
    out.omega_s_axis = j.s_grid;
    out.omega_i_axis = j.i_grid;
    out.values = Array2D<double>(j.s_grid.n_points, j.i_grid.n_points);
    for (size_t k = 0; k < j.amplitudes.size(); ++k) out.values.data[k] = std::norm(j.amplitudes.data[k]);

    const auto ws = trapezoid_weights(j.s_grid.n_points, j.s_grid.spacing());
    const auto wi = trapezoid_weights(j.i_grid.n_points, j.i_grid.spacing());
    double total = 0.0;
    for (int a = 0; a < j.s_grid.n_points; ++a)
        for (int b = 0; b < j.i_grid.n_points; ++b) total += ws[a] * wi[b] * out.values.at(a, b);
    for (auto& v : out.values.data) v /= total;
    return out;
}

JointIntensityGrid jti(const JointSpectralAmplitude& j) {
    const int ns = j.s_grid.n_points;
    const int ni = j.i_grid.n_points;
    Array2D<complexd> buf = j.amplitudes;

    // Separable centered DFT along each axis (same convention as
    // to_time_domain): alternate signs, transform, dual-axis phase.
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ni; ++b)
            if ((a + b) & 1) buf.at(a, b) = -buf.at(a, b);
    dft_rows(buf, -1);
    dft_cols(buf, -1);

    JointIntensityGrid out;
    out.time_domain = true;
    out.t_s_axis = dual_time_grid(j.s_grid);
    out.t_i_axis = dual_time_grid(j.i_grid);
    out.values = Array2D<double>(ns, ni);
    // Phases from omega_min drop out of the modulus; |.|^2 directly.
    const double scale = j.s_grid.spacing() * j.i_grid.spacing() / kTwoPi;
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ni; ++b) out.values.at(a, b) = std::norm(scale * buf.at(a, b));

    const auto ws = trapezoid_weights(ns, out.t_s_axis.spacing());
    const auto wi = trapezoid_weights(ni, out.t_i_axis.spacing());
    double total = 0.0;
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ni; ++b) total += ws[a] * wi[b] * out.values.at(a, b);
    for (auto& v : out.values.data) v /= total;
    return out;
}

DifferenceTimeProfile degenerate_jti_profile(const DegenerateJsa& j) {
    const int n = j.nu_grid.n_points;
    std::vector<complexd> buf(j.amplitudes);
    for (int k = 1; k < n; k += 2) buf[k] = -buf[k];
    dft_forward(buf);

    const TimeGrid tg = dual_time_grid(j.nu_grid);
    DifferenceTimeProfile out;
    out.u_axis.n_points = n;
    out.u_axis.t_min = 2.0 * tg.t_min;
    out.u_axis.t_max = 2.0 * tg.t_max;
    out.density.resize(n);
    const double scale = j.nu_grid.spacing() / std::sqrt(kTwoPi);
    for (int k = 0; k < n; ++k) out.density[k] = 0.5 * std::norm(scale * buf[k]);
    return out;
}

double ellipticity(const CombParams& params) {
    if (!(params.phasematch_width > 0.0) || !(params.pump_width > 0.0))
        throw SimError(ErrorCode::InvalidArgument, "ellipticity needs positive widths");
    const double a = 1.0 / (params.phasematch_width * params.phasematch_width);
    const double b = 1.0 / (params.pump_width * params.pump_width);
    return (a - b) / (a + b);
}

}  // namespace chronocycle
