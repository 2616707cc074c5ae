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

#include "chronocycle/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace chronocycle {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

WignerGrid wigner(const SampledSpectrum& s, const TimeGrid& t_axis) {
    s.grid.validate();
    t_axis.validate();
    const int n = s.grid.n_points;
    const int nt = t_axis.n_points;
    const double dw = s.grid.spacing();

    // Fringes in t run at twice the spectral spread, so the time axis must
    // sample the scale 1/(2 sigma_omega).
    {
        double total = 0.0, m1 = 0.0, m2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double e = std::norm(s.amplitudes[j]);
            const double w = s.grid.omega(j);
            total += e;
            m1 += e * w;
            m2 += e * w * w;
        }
        if (!(total > 0.0)) throw SimError(ErrorCode::ZeroState, "wigner of a zero state");
        const double mean = m1 / total;
        const double sigma = std::sqrt(std::max(0.0, m2 / total - mean * mean));
        if (sigma > 0.0 && t_axis.spacing() * 2.0 * sigma > 1.0)
            throw SimError(ErrorCode::GridTooCoarse,
                           "time axis undersamples the phase-space fringes");
    }

    WignerGrid out;
    out.omega_axis = s.grid;
    out.t_axis = t_axis;
    out.values = Array2D<double>(n, nt);

    std::vector<complexd> pk;
    pk.reserve(n / 2 + 1);
    for (int i = 0; i < n; ++i) {
        const int m = std::min(i, n - 1 - i);
        pk.assign(m + 1, complexd(0.0, 0.0));
        for (int k = 0; k <= m; ++k)
            pk[k] = s.amplitudes[i - k] * std::conj(s.amplitudes[i + k]);
        for (int l = 0; l < nt; ++l) {
            const double t = t_axis.t(l);
            const complexd rot = std::polar(1.0, 2.0 * dw * t);
            complexd r = rot;
            double acc = pk[0].real();
            for (int k = 1; k <= m; ++k) {
                acc += 2.0 * (r * pk[k]).real();
                r *= rot;
            }
            out.values.at(i, l) = acc * dw / kPi;
        }
    }
    return out;
}

double wigner_at(const SampledSpectrum& s, double omega, double t) {
    const int n = s.grid.n_points;
    const double dw = s.grid.spacing();
    const double c = (omega - s.grid.omega_min) / dw;
    const double c2 = 2.0 * c;
    const long long c2i = std::llround(c2);
    if (std::abs(c2 - static_cast<double>(c2i)) > 1e-6)
        throw SimError(ErrorCode::InvalidArgument,
                       "wigner_at needs omega on the grid or half-grid");
    double acc = 0.0;
    if (c2i % 2 == 0) {
        // On-grid center: integer offsets.
        const int ic = static_cast<int>(c2i / 2);
        if (ic < 0 || ic >= n) return 0.0;
        const int m = std::min(ic, n - 1 - ic);
        acc = std::norm(s.amplitudes[ic]);
        for (int k = 1; k <= m; ++k) {
            const complexd p = s.amplitudes[ic - k] * std::conj(s.amplitudes[ic + k]);
            acc += 2.0 * (std::polar(1.0, 2.0 * k * dw * t) * p).real();
        }
    } else {
        // Half-grid center: half-integer offsets k+1/2 keep samples on-grid.
        const int lo = static_cast<int>((c2i - 1) / 2);
        for (int k = 0;; ++k) {
            const int jl = lo - k;
            const int jr = lo + 1 + k;
            if (jl < 0 || jr >= n) break;
            const complexd p = s.amplitudes[jl] * std::conj(s.amplitudes[jr]);
            acc += 2.0 * (std::polar(1.0, 2.0 * (k + 0.5) * dw * t) * p).real();
        }
    }
    return acc * dw / kPi;
}

TimeGrid natural_wigner_time_axis(const FrequencyGrid& g, int n_points) {
    // e^{2 i v t}: the conjugate variable is 2v, so the alias-free window is
    // half the ordinary dual window.
    const double half = 0.5 * kPi / g.spacing();
    TimeGrid t;
    t.n_points = n_points;
    t.t_min = -half;
    t.t_max = half - 2.0 * half / n_points;
    return t;
}

std::vector<double> marginal(const WignerGrid& w, MarginalAxis axis) {
    const int n = w.omega_axis.n_points;
    const int nt = w.t_axis.n_points;
    if (axis == MarginalAxis::time) {
        const auto wt = trapezoid_weights(nt, w.t_axis.spacing());
        std::vector<double> out(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int l = 0; l < nt; ++l) acc += wt[l] * w.values.at(i, l);
            out[i] = acc;
        }
        return out;
    }
    const auto ww = trapezoid_weights(n, w.omega_axis.spacing());
    std::vector<double> out(nt, 0.0);
    for (int l = 0; l < nt; ++l) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += ww[i] * w.values.at(i, l);
        out[l] = acc;
    }
    return out;
}

}  // namespace chronocycle
