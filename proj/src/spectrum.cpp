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

#include "chronocycle/spectrum.hpp"

#include <cmath>

#include "chronocycle/fft.hpp"

namespace chronocycle {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;
}  // namespace

double SampledSpectrum::norm() const {
    const auto w = trapezoid_weights(grid.n_points, grid.spacing());
    double acc = 0.0;
    for (int j = 0; j < grid.n_points; ++j) acc += w[j] * std::norm(amplitudes[j]);
    return std::sqrt(acc);
}

double TemporalAmplitude::norm() const {
    const auto w = trapezoid_weights(grid.n_points, grid.spacing());
    double acc = 0.0;
    for (int j = 0; j < grid.n_points; ++j) acc += w[j] * std::norm(amplitudes[j]);
    return std::sqrt(acc);
}

complexd inner_product(const SampledSpectrum& a, const SampledSpectrum& b) {
    if (!(a.grid == b.grid))
        throw SimError(ErrorCode::InvalidArgument, "inner_product requires matching grids");
    const auto w = trapezoid_weights(a.grid.n_points, a.grid.spacing());
    complexd acc = 0.0;
    for (int j = 0; j < a.grid.n_points; ++j) acc += w[j] * std::conj(a.amplitudes[j]) * b.amplitudes[j];
    return acc;
}

complexd inner_product(const TemporalAmplitude& a, const TemporalAmplitude& b) {
    if (a.grid.n_points != b.grid.n_points)
        throw SimError(ErrorCode::InvalidArgument, "inner_product requires matching grids");
    const auto w = trapezoid_weights(a.grid.n_points, a.grid.spacing());
    complexd acc = 0.0;
    for (int j = 0; j < a.grid.n_points; ++j) acc += w[j] * std::conj(a.amplitudes[j]) * b.amplitudes[j];
    return acc;
}

SampledSpectrum sample_spectrum(const FrequencyGrid& grid,
                                const std::function<complexd(double)>& f) {
    grid.validate();
    SampledSpectrum s;
    s.grid = grid;
    s.amplitudes.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) s.amplitudes[j] = f(grid.omega(j));
    return s;
}

SampledSpectrum normalize(const SampledSpectrum& s) {
    const double n = s.norm();
    if (!(n > 1e-150)) throw SimError(ErrorCode::ZeroState, "cannot normalize an all-zero spectrum");
    SampledSpectrum out = s;
    const double inv = 1.0 / n;
    for (auto& a : out.amplitudes) a *= inv;
    return out;
}

TimeGrid dual_time_grid(const FrequencyGrid& g) {
    const int n = g.n_points;
    const double dt = kTwoPi / (n * g.spacing());
    TimeGrid t;
    t.n_points = n;
    t.t_min = -(n / 2) * dt;
    t.t_max = t.t_min + dt * (n - 1);
    return t;
}

TemporalAmplitude to_time_domain(const SampledSpectrum& s) {
    const int n = s.grid.n_points;
    const double dw = s.grid.spacing();

    // Grid-adequacy checks. Edge clipping in frequency:
    double total = 0.0;
    for (const auto& a : s.amplitudes) total += std::norm(a);
    if (!(total > 0.0)) throw SimError(ErrorCode::ZeroState, "to_time_domain of zero state");
    const int margin = std::max(2, n / 64);
    double edge = 0.0;
    for (int j = 0; j < margin; ++j) edge += std::norm(s.amplitudes[j]) + std::norm(s.amplitudes[n - 1 - j]);
    if (edge / total > 1e-3)
        throw SimError(ErrorCode::GridTooCoarse,
                       "frequency grid clips the state; enlarge the frequency span");

    // Arrival-time spread from the spectral roughness: by Parseval,
    // sum |S_{j+1}-S_j|^2 / (dw^2 sum |S_j|^2) estimates <t^2> of the
    // arrival-time density, including any time offset carried as a phase ramp.
    double rough = 0.0;
    for (int j = 0; j + 1 < n; ++j) rough += std::norm(s.amplitudes[j + 1] - s.amplitudes[j]);
    const double sigma_t = std::sqrt(rough / (dw * dw * total));
    const double window = kTwoPi / dw;
    // Gaussian-tail estimate of the energy outside [-window/2, window/2].
    if (std::erfc(window / (2.0 * std::sqrt(2.0) * sigma_t)) > 1e-3)
        throw SimError(ErrorCode::GridTooCoarse,
                       "time window cannot hold the state; refine the frequency spacing");

    std::vector<complexd> buf(s.amplitudes);
    for (int j = 1; j < n; j += 2) buf[j] = -buf[j];
    dft_forward(buf);

    TemporalAmplitude out;
    out.grid = dual_time_grid(s.grid);
    out.amplitudes.resize(n);
    const double scale = dw / kSqrtTwoPi;
    for (int k = 0; k < n; ++k) {
        const double t = out.grid.t(k);
        out.amplitudes[k] = scale * std::polar(1.0, -s.grid.omega_min * t) * buf[k];
    }
    return out;
}

complexd temporal_amplitude_at(const SampledSpectrum& s, double t) {
    const auto w = trapezoid_weights(s.grid.n_points, s.grid.spacing());
    complexd acc = 0.0;
    for (int j = 0; j < s.grid.n_points; ++j)
        acc += w[j] * s.amplitudes[j] * std::polar(1.0, -s.grid.omega(j) * t);
    return acc / kSqrtTwoPi;
}

}  // namespace chronocycle
