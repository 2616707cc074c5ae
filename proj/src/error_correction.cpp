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

#include "chronocycle/error_correction.hpp"

#include <cmath>
#include <random>
#include <thread>
#include <vector>

namespace chronocycle {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double delta_squared_theory(const NoiseModel& noise) {
    const double a2 = noise.time_width_signal * noise.time_width_signal;
    const double b2 = noise.time_width_idler * noise.time_width_idler;
    return a2 * b2 / (a2 + b2);
}

/// Nearest index on a lattice of the given spacing, exact midpoints toward
/// the lower index.
long long decode_index(double x, double spacing) {
    const double f = x / spacing;
    const double fl = std::floor(f);
    const double frac = f - fl;
    if (frac > 0.5) return static_cast<long long>(fl) + 1;
    return static_cast<long long>(fl);  // frac == 0.5 ties to the lower index
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::pair<double, double> c_prime_on_times(double ts, double ti) {
    return {ts + ti, ts - ti};
}

Posterior posterior_after_click(const NoiseModel& noise, const CombParams& comb, double tau,
                                long long m) {
    if (noise.kind != NoiseKind::gaussian)
        throw SimError(ErrorCode::ModelMismatch, "posterior_after_click needs a gaussian model");
    const double a2 = noise.time_width_signal * noise.time_width_signal;
    const double b2 = noise.time_width_idler * noise.time_width_idler;
    if (!(a2 > 0.0) || !(b2 > 0.0))
        throw SimError(ErrorCode::InvalidArgument, "gaussian noise widths must be positive");
    const double period = kTwoPi / comb.fsr;
    Posterior p;
    p.click_time = tau;
    p.peak_index = m;
    p.mean = (tau + static_cast<double>(m) * period) * a2 / (a2 + b2);
    p.std_dev = std::sqrt(a2 * b2 / (a2 + b2));
    return p;
}

EcTrialRecord run_trial(const CombParams& comb, const NoiseModel& noise, std::uint64_t seed) {
    comb.validate();
    const double period = kTwoPi / comb.fsr;   // T
    const double half = 0.5 * period;          // decision lattice spacing

    EcTrialRecord rec;
    std::mt19937_64 rng(derive_seed(seed, 0));
    long long k_star = 0;

    if (noise.kind == NoiseKind::gaussian) {
        std::normal_distribution<double> gs(0.0, noise.time_width_signal);
        std::normal_distribution<double> gi(0.0, noise.time_width_idler);
        rec.t = gs(rng);
        rec.t_prime = gi(rng);
        if (noise.freq_width > 0.0) {
            std::normal_distribution<double> gw(0.0, noise.freq_width);
            rec.omega = gw(rng);
            rec.omega_prime = gw(rng);
        }
        // Which comb peak fires: categorical over the temporal envelope set by
        // the tooth width (intensity envelope exp(-(k T)^2 freq_width^2)).
        if (noise.freq_width > 0.0) {
            const double spread = 1.0 / (noise.freq_width * period);
            const long long k_max = std::max<long long>(1, static_cast<long long>(std::ceil(5.0 * spread)));
            std::vector<double> weights(static_cast<size_t>(2 * k_max + 1));
            for (long long k = -k_max; k <= k_max; ++k) {
                const double x = static_cast<double>(k) * period * noise.freq_width;
                weights[static_cast<size_t>(k + k_max)] = std::exp(-x * x);
            }
            std::discrete_distribution<long long> pick(weights.begin(), weights.end());
            k_star = pick(rng) - k_max;
        }
    } else {
        rec.t = noise.dirac_t;
        rec.t_prime = noise.dirac_t_prime;
        rec.omega = noise.dirac_omega;
        rec.omega_prime = noise.dirac_omega_prime;
    }

    const double u = rec.t - rec.t_prime;          // revealed by the click
    const double data_shift = 0.5 * (rec.t + rec.t_prime);
    rec.click_time = static_cast<double>(k_star) * period + u;
    rec.true_index = 2 * k_star;
    rec.decoded_index = decode_index(rec.click_time, half);

    const double u_hat = rec.click_time - static_cast<double>(rec.decoded_index) * half;
    // Correct decode AND strictly inside the decision window: exact boundary
    // clicks (measure zero) count as failures regardless of the tie rule.
    rec.success = (rec.decoded_index == rec.true_index) && (std::abs(u_hat) < 0.5 * half);

    if (noise.kind == NoiseKind::gaussian) {
        const double a2 = noise.time_width_signal * noise.time_width_signal;
        const double b2 = noise.time_width_idler * noise.time_width_idler;
        rec.posterior.click_time = rec.click_time;
        rec.posterior.peak_index = rec.decoded_index;
        rec.posterior.mean = u_hat * a2 / (a2 + b2);
        rec.posterior.std_dev = std::sqrt(delta_squared_theory(noise));
        // Conditional mean of the data shift given the revealed offset.
        rec.correction = u_hat * (a2 - b2) / (2.0 * (a2 + b2));
        rec.residual_error = data_shift - rec.correction;
    } else {
        rec.posterior.click_time = rec.click_time;
        rec.posterior.peak_index = rec.decoded_index;
        rec.posterior.mean = data_shift;
        rec.posterior.std_dev = 0.0;
        rec.correction = 0.0;
        rec.residual_error = data_shift;
    }
    return rec;
}

EcStatistics ec_monte_carlo(const CombParams& comb, const NoiseModel& noise, long long n_trials,
                            std::uint64_t master_seed, int n_threads) {
    if (n_trials < 1) throw SimError(ErrorCode::InvalidArgument, "n_trials must be >= 1");

    struct Compact {
        double residual;
        bool success;
    };
    std::vector<Compact> results(static_cast<size_t>(n_trials));

    auto worker = [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            const EcTrialRecord rec = run_trial(comb, noise, derive_seed(master_seed, static_cast<std::uint64_t>(i)));
            results[static_cast<size_t>(i)] = {rec.residual_error, rec.success};
        }
    };

    const int workers = std::max(1, n_threads);
    if (workers == 1) {
        worker(0, n_trials);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (n_trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long lo = w * chunk;
            const long long hi = std::min<long long>(n_trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    // Reduce strictly in trial order: results are independent of thread count.
    EcStatistics st;
    st.n_trials = n_trials;
    double sum = 0.0, sum_sq = 0.0, s_sum = 0.0, s_sum_sq = 0.0;
    long long successes = 0;
    for (const auto& r : results) {
        sum += r.residual;
        sum_sq += r.residual * r.residual;
        if (r.success) {
            ++successes;
            s_sum += r.residual;
            s_sum_sq += r.residual * r.residual;
        }
    }
    st.successes = successes;
    st.success_rate = static_cast<double>(successes) / static_cast<double>(n_trials);
    const double n = static_cast<double>(n_trials);
    st.residual_mean = sum / n;
    st.residual_variance = sum_sq / n - st.residual_mean * st.residual_mean;
    if (successes > 0) {
        const double m = static_cast<double>(successes);
        st.success_residual_mean = s_sum / m;
        st.success_residual_variance = s_sum_sq / m - st.success_residual_mean * st.success_residual_mean;
    }
    if (noise.kind == NoiseKind::gaussian) {
        st.delta_squared = delta_squared_theory(noise);
        if (st.delta_squared > 0.0 && successes > 0)
            st.posterior_consistency = st.success_residual_variance / st.delta_squared - 1.0;
    }
    return st;
}

}  // namespace chronocycle
