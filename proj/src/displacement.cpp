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

#include "chronocycle/displacement.hpp"

#include <cmath>

#include "chronocycle/fft.hpp"

namespace chronocycle {

SampledSpectrum shift_frequency(const SampledSpectrum& s, double mu, double loss_tol) {
    const int n = s.grid.n_points;
    const double dw = s.grid.spacing();
    if (mu == 0.0) return s;

    // Energy that the shift would push across a grid edge (the discrete shift
    // wraps circularly, so this energy would corrupt the opposite edge).
    double total = 0.0;
    for (const auto& a : s.amplitudes) total += std::norm(a);
    const int kbins = std::min(n, static_cast<int>(std::ceil(std::abs(mu) / dw)));
    double wrapped = 0.0;
    if (mu > 0.0)
        for (int j = n - kbins; j < n; ++j) wrapped += std::norm(s.amplitudes[j]);
    else
        for (int j = 0; j < kbins; ++j) wrapped += std::norm(s.amplitudes[j]);
    if (total > 0.0 && wrapped / total > loss_tol)
        throw SimError(ErrorCode::OffGridShift, "frequency shift pushes energy off the grid");

    std::vector<complexd> buf(s.amplitudes);
    for (int j = 1; j < n; j += 2) buf[j] = -buf[j];
    dft_forward(buf);
    const TimeGrid tg = dual_time_grid(s.grid);
    for (int k = 0; k < n; ++k) buf[k] *= std::polar(1.0, -mu * tg.t(k));
    dft_backward(buf);
    SampledSpectrum out;
    out.grid = s.grid;
    out.amplitudes.resize(n);
    const double inv_n = 1.0 / n;
    for (int j = 0; j < n; ++j) out.amplitudes[j] = buf[j] * inv_n * ((j & 1) ? -1.0 : 1.0);
    return out;
}

SampledSpectrum shift_time(const SampledSpectrum& s, double tau) {
    SampledSpectrum out = s;
    if (tau == 0.0) return out;
    for (int j = 0; j < s.grid.n_points; ++j)
        out.amplitudes[j] *= std::polar(1.0, -s.grid.omega(j) * tau);
    return out;
}

SampledSpectrum displace(const SampledSpectrum& s, const DisplacementSpec& spec, double loss_tol) {
    SampledSpectrum out;
    switch (spec.ordering) {
        case Ordering::normal:
            out = shift_frequency(shift_time(s, spec.tau), spec.mu, loss_tol);
            break;
        case Ordering::antinormal:
            out = shift_time(shift_frequency(s, spec.mu, loss_tol), spec.tau);
            break;
        case Ordering::symmetric: {
            out = shift_frequency(shift_time(s, spec.tau), spec.mu, loss_tol);
            const complexd phase = std::polar(1.0, -0.5 * spec.mu * spec.tau);
            for (auto& a : out.amplitudes) a *= phase;
            break;
        }
    }
    return out;
}

complexd characteristic_function(const SampledSpectrum& s, const DisplacementSpec& spec) {
    const SampledSpectrum displaced = displace(s, spec);
    return inner_product(displaced, s);
}

}  // namespace chronocycle
