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

#include "chronocycle/hom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace chronocycle {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct ScanKernel {
    std::vector<double> nu;       // quadrature nodes
    std::vector<complexd> k;      // weighted kernel samples w * K(nu)
    double norm = 0.0;            // N = Int |g|^2 (filtered)
};

ScanKernel kernel_from_degenerate(const DegenerateJsa& j,
                                  const std::optional<FilterSpec>& filter) {
    const int n = j.nu_grid.n_points;
    const auto w = trapezoid_weights(n, j.nu_grid.spacing());
    ScanKernel out;
    out.nu.reserve(n);
    out.k.reserve(n);
    // -nu_j lands on index n - j for this symmetric grid; skip the unpaired
    // first sample (envelope tail).
    for (int jx = 1; jx < n; ++jx) {
        const double nu = j.nu_grid.omega(jx);
        const complexd g_pos = j.amplitudes[jx];
        const complexd g_neg = j.amplitudes[n - jx];
        double h = 1.0;
        if (filter) {
            const double a = 0.5 * (j.params.pump_center + nu);
            const double b = 0.5 * (j.params.pump_center - nu);
            h = filter_intensity_response(*filter, a) * filter_intensity_response(*filter, b);
        }
        out.nu.push_back(nu);
        out.k.push_back(w[jx] * h * g_pos * std::conj(g_neg));
        out.norm += w[jx] * h * std::norm(g_pos);
    }
    return out;
}

ScanKernel kernel_from_full(const JointSpectralAmplitude& j,
                            const std::optional<FilterSpec>& filter) {
    if (!(j.s_grid == j.i_grid))
        throw SimError(ErrorCode::InvalidArgument,
                       "HOM reduction of a 2-D JSA needs identical signal/idler grids");
    const int n = j.s_grid.n_points;
    const auto w = trapezoid_weights(n, j.s_grid.spacing());
    std::vector<double> h(n, 1.0);
    if (filter)
        for (int a = 0; a < n; ++a) h[a] = filter_intensity_response(*filter, j.s_grid.omega(a));

    // Accumulate the exchange kernel over anti-diagonals: nu = w_a - w_b.
    ScanKernel out;
    out.nu.assign(2 * n - 1, 0.0);
    out.k.assign(2 * n - 1, complexd(0.0, 0.0));
    const double dnu = j.s_grid.spacing();
    for (int d = -(n - 1); d <= n - 1; ++d) out.nu[d + n - 1] = d * dnu;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double ww = w[a] * w[b] * h[a] * h[b];
            const complexd cross = j.amplitudes.at(a, b) * std::conj(j.amplitudes.at(b, a));
            out.k[a - b + n - 1] += ww * cross;
            out.norm += ww * std::norm(j.amplitudes.at(a, b));
        }
    }
    return out;
}

double scan_value(const ScanKernel& kern, double tau) {
    complexd acc = 0.0;
    const size_t n = kern.nu.size();
    for (size_t i = 0; i < n; ++i)
        acc += kern.k[i] * std::polar(1.0, -0.5 * kern.nu[i] * tau);
    return 0.5 * (1.0 - acc.real() / kern.norm);
}

void parallel_for(int n_tasks, int n_threads, const std::function<void(int)>& fn) {
    if (n_threads <= 1 || n_tasks <= 1) {
        for (int i = 0; i < n_tasks; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    const int workers = std::min(n_threads, n_tasks);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n_tasks; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

double filter_intensity_response(const FilterSpec& f, double omega) {
    if (!(f.bandwidth > 0.0))
        throw SimError(ErrorCode::InvalidArgument, "filter bandwidth must be positive");
    const double x = omega - f.center;
    if (f.shape == FilterSpec::Shape::rect) return std::abs(x) <= 0.5 * f.bandwidth ? 1.0 : 0.0;
    const double sigma = f.bandwidth / 2.3548200450309493;  // FWHM -> std
    return std::exp(-0.5 * (x / sigma) * (x / sigma));
}

HomScan coincidence_scan(const JsaModel& source, const std::vector<double>& tau_axis,
                         const std::optional<FilterSpec>& filter) {
    ScanKernel kern;
    CombParams params;
    if (std::holds_alternative<DegenerateJsa>(source)) {
        const auto& d = std::get<DegenerateJsa>(source);
        kern = kernel_from_degenerate(d, filter);
        params = d.params;
    } else {
        const auto& f = std::get<JointSpectralAmplitude>(source);
        kern = kernel_from_full(f, filter);
        params = f.params;
    }
    if (!(kern.norm > 0.0))
        throw SimError(ErrorCode::GridTooCoarse, "HOM kernel vanished; check grids and filter");

    HomScan scan;
    scan.params = params;
    scan.tau = tau_axis;
    scan.coincidence.resize(tau_axis.size());
    for (size_t i = 0; i < tau_axis.size(); ++i)
        scan.coincidence[i] = scan_value(kern, tau_axis[i]);
    return scan;
}

double coincidence_analytic(const CombParams& comb, double tau) {
    comb.validate();
    if (!comb.high_finesse())
        throw SimError(ErrorCode::RegimeViolation,
                       "closed form requires fsr/tooth_width > 10");
    if (!(comb.phasematch_width > 0.0))
        throw SimError(ErrorCode::InvalidArgument, "phasematch_width must be positive");
    if (comb.peak_count < 1)
        throw SimError(ErrorCode::InvalidArgument, "peak_count must be >= 1");

    const double wbar = comb.fsr;
    const double half_pump = 0.5 * comb.pump_center;
    double num = 0.0, den = 0.0;
    for (int n = -comb.peak_count; n <= comb.peak_count; ++n) {
        const double x = (half_pump - n * wbar) / comb.phasematch_width;
        const double alpha = std::exp(-x * x);
        num += alpha * std::cos((n * wbar - half_pump) * tau);
        den += alpha;
    }
    const double envelope =
        std::exp(-comb.tooth_width * comb.tooth_width * tau * tau / 8.0);
    return 0.5 * (1.0 - envelope * num / den);
}

double dip_visibility(const HomScan& scan, double center, double window) {
    const double lo = center - 0.5 * window;
    const double hi = center + 0.5 * window;
    int best = -1;
    int interior_minima = 0;
    for (size_t i = 1; i + 1 < scan.tau.size(); ++i) {
        if (scan.tau[i] < lo || scan.tau[i] > hi) continue;
        if (scan.coincidence[i] <= scan.coincidence[i - 1] &&
            scan.coincidence[i] < scan.coincidence[i + 1]) {
            ++interior_minima;
            if (best < 0 || scan.coincidence[i] < scan.coincidence[best]) best = static_cast<int>(i);
        }
    }
    if (best < 0) throw SimError(ErrorCode::NoDipFound, "no interior minimum inside the window");
    return (0.5 - scan.coincidence[best]) / 0.5;
}

std::vector<VisibilityPoint> visibility_vs_reflectivity(
    const CombParams& params, const CavityModel& cavity_template,
    const std::vector<double>& r_grid, const std::vector<std::optional<FilterSpec>>& filters,
    int n_threads) {
    if (cavity_template.kind != CavityKind::fabry_perot)
        throw SimError(ErrorCode::InvalidArgument, "reflectivity sweep needs a fabry_perot cavity");
    for (double r : r_grid)
        if (!(r >= 0.0 && r <= 0.99))
            throw SimError(ErrorCode::InvalidArgument, "r_grid must lie within [0, 0.99]");

    struct Task {
        double r;
        std::optional<FilterSpec> filter;
    };
    std::vector<Task> tasks;
    for (double r : r_grid)
        for (const auto& f : filters) tasks.push_back({r, f});

    const double tau_rt = params.round_trip_time();
    std::vector<VisibilityPoint> out(tasks.size());

    parallel_for(static_cast<int>(tasks.size()), n_threads, [&](int idx) {
        const Task& task = tasks[static_cast<size_t>(idx)];
        CavityModel cav = cavity_template;
        cav.reflectivity = task.r;
        const DegenerateJsa src = build_degenerate_jsa(params, cav, 16, 4.0);

        // First-replica window; 161 samples then a parabolic refinement.
        const int n_tau = 161;
        std::vector<double> taus(n_tau);
        for (int i = 0; i < n_tau; ++i)
            taus[i] = tau_rt * (0.55 + 0.9 * i / (n_tau - 1.0));
        const HomScan scan = coincidence_scan(JsaModel(src), taus, task.filter);

        int imin = 0;
        for (int i = 1; i < n_tau; ++i)
            if (scan.coincidence[i] < scan.coincidence[imin]) imin = i;
        double tmin = taus[imin];
        double vmin = scan.coincidence[imin];
        if (imin > 0 && imin + 1 < n_tau) {
            const double y0 = scan.coincidence[imin - 1];
            const double y1 = scan.coincidence[imin];
            const double y2 = scan.coincidence[imin + 1];
            const double denom = y0 - 2.0 * y1 + y2;
            if (denom > 0.0) {
                const double shift = 0.5 * (y0 - y2) / denom;
                tmin = taus[imin] + shift * (taus[1] - taus[0]);
                vmin = y1 - 0.25 * (y0 - y2) * shift;
            }
        }
        VisibilityPoint p;
        p.reflectivity = task.r;
        p.filter_bandwidth = task.filter ? task.filter->bandwidth : 0.0;
        p.visibility = std::max(0.0, (0.5 - vmin) / 0.5);
        p.tau_at_min = tmin;
        p.coincidence_min = vmin;
        out[static_cast<size_t>(idx)] = p;
    });
    return out;
}

}  // namespace chronocycle
