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

#include "chronocycle/two_photon_wigner.hpp"

#include <cmath>

namespace chronocycle {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Center coordinate in units of half the grid spacing; throws unless the
// point lies on the grid or half-grid.
long long half_steps(const FrequencyGrid& g, double x, const char* what) {
    const double c2 = 2.0 * (x - g.omega_min) / g.spacing();
    const long long c2i = std::llround(c2);
    if (std::abs(c2 - static_cast<double>(c2i)) > 1e-6)
        throw SimError(ErrorCode::InvalidArgument,
                       std::string(what) + " must sit on the grid or half-grid");
    return c2i;
}

}  // namespace

double two_photon_wigner_at(const JointSpectralAmplitude& j, double omega_s, double omega_i,
                            double t_s, double t_i) {
    const auto& gs = j.s_grid;
    const auto& gi = j.i_grid;
    const long long cs2 = half_steps(gs, omega_s, "omega_s");
    const long long ci2 = half_steps(gi, omega_i, "omega_i");
    const double ds = gs.spacing();
    const double di = gi.spacing();

    // Enumerate offsets v = k*ds (or (k+1/2)*ds on the half-grid) such that
    // both ws - v and ws + v are grid samples; likewise for the idler.
    auto offsets = [](long long c2, int n) {
        std::vector<std::pair<int, double>> out;  // (low index, offset in steps)
        if (c2 % 2 == 0) {
            const int c = static_cast<int>(c2 / 2);
            for (int k = -(n - 1); k < n; ++k) {
                const int lo = c - k;
                const int hi = c + k;
                if (lo < 0 || lo >= n || hi < 0 || hi >= n) continue;
                out.emplace_back(lo, static_cast<double>(k));
            }
        } else {
            const int base = static_cast<int>((c2 - 1) / 2);
            for (int k = -(n - 1); k < n; ++k) {
                const int lo = base - k;
                const int hi = base + 1 + k;
                if (lo < 0 || lo >= n || hi < 0 || hi >= n) continue;
                out.emplace_back(lo, k + 0.5);
            }
        }
        return out;
    };

    const auto offs = offsets(cs2, gs.n_points);
    const auto offi = offsets(ci2, gi.n_points);

    complexd acc = 0.0;
    for (const auto& [alo, ak] : offs) {
        const int ahi = alo + static_cast<int>(2.0 * ak);
        const complexd es = std::polar(1.0, 2.0 * ak * ds * t_s);
        for (const auto& [blo, bk] : offi) {
            const int bhi = blo + static_cast<int>(2.0 * bk);
            const complexd p =
                j.amplitudes.at(alo, blo) * std::conj(j.amplitudes.at(ahi, bhi));
            acc += es * std::polar(1.0, 2.0 * bk * di * t_i) * p;
        }
    }
    return acc.real() * ds * di / (kPi * kPi);
}

TwoPhotonWignerSlice two_photon_wigner_slices(const JointSpectralAmplitude& j,
                                              const TwoPhotonSliceSpec& spec) {
    const int ns = j.s_grid.n_points;
    const int ni = j.i_grid.n_points;

    TwoPhotonWignerSlice out;
    out.kind = spec.kind;
    if (spec.kind == TwoPhotonSliceKind::omega_omega) {
        const long long work =
            static_cast<long long>(ns) * ni * ns * ni;  // offsets bounded by grid sizes
        if (work > (1LL << 26))
            throw SimError(ErrorCode::BudgetExceeded, "omega_omega slice exceeds the sample budget");
        out.axis_a.resize(ns);
        out.axis_b.resize(ni);
        for (int a = 0; a < ns; ++a) out.axis_a[a] = j.s_grid.omega(a);
        for (int b = 0; b < ni; ++b) out.axis_b[b] = j.i_grid.omega(b);
        out.values = Array2D<double>(ns, ni);
        for (int a = 0; a < ns; ++a)
            for (int b = 0; b < ni; ++b)
                out.values.at(a, b) = two_photon_wigner_at(j, j.s_grid.omega(a), j.i_grid.omega(b),
                                                           spec.fixed_t_s, spec.fixed_t_i);
        return out;
    }

    spec.t_s_axis.validate();
    spec.t_i_axis.validate();
    const int ms = spec.t_s_axis.n_points;
    const int mi = spec.t_i_axis.n_points;
    const long long work = static_cast<long long>(ms) * mi * ns * ni;
    if (work > (1LL << 26))
        throw SimError(ErrorCode::BudgetExceeded, "time_time slice exceeds the sample budget");
    out.axis_a.resize(ms);
    out.axis_b.resize(mi);
    for (int a = 0; a < ms; ++a) out.axis_a[a] = spec.t_s_axis.t(a);
    for (int b = 0; b < mi; ++b) out.axis_b[b] = spec.t_i_axis.t(b);
    out.values = Array2D<double>(ms, mi);
    for (int a = 0; a < ms; ++a)
        for (int b = 0; b < mi; ++b)
            out.values.at(a, b) = two_photon_wigner_at(j, spec.fixed_omega_s, spec.fixed_omega_i,
                                                       spec.t_s_axis.t(a), spec.t_i_axis.t(b));
    return out;
}

WignerGrid omega_minus_wigner(const DegenerateJsa& j, const TimeGrid& t_axis) {
    // x = nu/2 carries the collective mode; h(x) = sqrt(2) g(2x) is normalized
    // when g is.
    SampledSpectrum h;
    h.grid.omega_min = 0.5 * j.nu_grid.omega_min;
    h.grid.omega_max = 0.5 * j.nu_grid.omega_max;
    h.grid.n_points = j.nu_grid.n_points;
    h.grid.unit_mode = j.nu_grid.unit_mode;
    h.amplitudes.resize(j.amplitudes.size());
    const double s = std::sqrt(2.0);
    for (size_t k = 0; k < j.amplitudes.size(); ++k) h.amplitudes[k] = s * j.amplitudes[k];
    return wigner(h, t_axis);
}

}  // namespace chronocycle
