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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "chronocycle/error_correction.hpp"
#include "test_helpers.hpp"

using namespace chronocycle;
using namespace chronocycle::testing;

namespace {

CombParams ec_comb() {
    CombParams c;
    c.fsr = kTwoPi;  // T = 1, decision window |t - t'| < 1/4
    c.tooth_width = 0.05 * c.fsr;
    c.pump_width = 0.0;
    c.phasematch_width = 8.0 * c.fsr;
    c.pump_center = 0.0;
    c.peak_count = 20;
    c.unit_mode = UnitMode::normalized;
    return c;
}

NoiseModel gaussian_noise(double sigma_signal, double sigma_idler, double freq_width = 0.0) {
    NoiseModel n;
    n.kind = NoiseKind::gaussian;
    n.time_width_signal = sigma_signal;
    n.time_width_idler = sigma_idler;
    n.freq_width = freq_width;
    return n;
}

NoiseModel dirac_noise(double t, double t_prime) {
    NoiseModel n;
    n.kind = NoiseKind::dirac;
    n.dirac_t = t;
    n.dirac_t_prime = t_prime;
    return n;
}

/// Completion-of-squares oracle: moments of the prior-times-likelihood
/// product G_{ss}(x) G_{si}(x - u) by quadrature, independent of the
/// closed-form implementation.
std::pair<double, double> gaussian_product_moments(double ss, double si, double u) {
    const double lo = std::min(0.0, u) - 12.0 * std::max(ss, si);
    const double hi = std::max(0.0, u) + 12.0 * std::max(ss, si);
    const int n = 40001;
    const double dx = (hi - lo) / (n - 1);
    double mass = 0.0, m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + i * dx;
        const double a = x / ss;
        const double b = (x - u) / si;
        const double f = std::exp(-0.5 * a * a - 0.5 * b * b);
        mass += f;
        m1 += x * f;
        m2 += x * x * f;
    }
    const double mean = m1 / mass;
    return {mean, m2 / mass - mean * mean};
}

}  // namespace

TEST_CASE("c_prime_on_times: arithmetic map") {
    CHECK(c_prime_on_times(0.0, 0.0) == std::pair<double, double>{0.0, 0.0});
    CHECK(c_prime_on_times(1.5, 1.5) == std::pair<double, double>{3.0, 0.0});
    CHECK(c_prime_on_times(2.0, -0.5) == std::pair<double, double>{1.5, 2.5});
}

TEST_CASE("c_prime_on_times: displacement conjugation on sampled amplitudes") {
    // F is a closed-form two-photon temporal amplitude; the entangling map
    // composed with local displacements (t, t') equals the conjugated
    // displacements (t + t', t - t') composed with the map.
    auto F = [](double ts, double ti) {
        const std::complex<double> i01(0.0, 1.0);
        return std::exp(-0.5 * (ts - 0.3) * (ts - 0.3) - 0.7 * ti * ti) *
               std::exp(i01 * (0.4 * ts - 1.1 * ti));
    };
    auto cprime = [&](auto G) {
        return [G](double u, double v) { return G(0.5 * (u + v), 0.5 * (u - v)) / std::sqrt(2.0); };
    };
    auto displace2 = [](auto G, double a, double b) {
        return [G, a, b](double ts, double ti) { return G(ts - a, ti - b); };
    };

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        const double t = dist(rng), tp = dist(rng);
        auto lhs = cprime(displace2(F, t, tp));
        auto rhs = displace2(cprime(F), t + tp, t - tp);
        for (double u : {-1.3, 0.0, 0.7, 2.1})
            for (double v : {-2.0, -0.4, 1.6}) {
                CHECK(std::abs(lhs(u, v) - rhs(u, v)) < 1e-9);
            }
    }
}

TEST_CASE("posterior_after_click: symmetric and degenerate limits") {
    auto c = ec_comb();
    const double T = c.round_trip_time();
    const double sigma = 0.07;
    auto p = posterior_after_click(gaussian_noise(sigma, sigma), c, 0.13, 2);
    CHECK(p.std_dev * p.std_dev == doctest::Approx(0.5 * sigma * sigma).epsilon(1e-12));
    CHECK(p.mean == doctest::Approx(0.5 * (0.13 + 2.0 * T)).epsilon(1e-12));

    auto narrow = posterior_after_click(gaussian_noise(sigma, 1e-9), c, 0.2, 0);
    CHECK(narrow.std_dev * narrow.std_dev < 1e-17);

    CHECK_THROWS_AS(posterior_after_click(dirac_noise(0.0, 0.0), c, 0.1, 0), SimError);
}

TEST_CASE("posterior_after_click: matches the completion-of-squares oracle") {
    auto c = ec_comb();
    const double T = c.round_trip_time();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> width(0.02, 0.3);
    std::uniform_real_distribution<double> click(-0.3, 0.3);
    std::uniform_int_distribution<int> peak(-3, 3);
    for (int rep = 0; rep < 8; ++rep) {
        const double ss = width(rng), si = width(rng);
        const double tau = click(rng);
        const int m = peak(rng);
        auto p = posterior_after_click(gaussian_noise(ss, si), c, tau, m);
        auto [mean, var] = gaussian_product_moments(ss, si, tau + m * T);
        CHECK(std::abs(p.mean - mean) < 1e-12);
        CHECK(std::abs(p.std_dev * p.std_dev - var) < 1e-12);
    }
}

TEST_CASE("run_trial: noiseless dirac round succeeds with zero residual") {
    auto c = ec_comb();
    auto rec = run_trial(c, dirac_noise(0.0, 0.0), 1);
    CHECK(rec.success);
    CHECK(rec.residual_error == 0.0);
    CHECK(rec.decoded_index == 0);
}

TEST_CASE("run_trial: dirac decision window is |t - t'| < pi/(2 fsr), boundary excluded") {
    auto c = ec_comb();
    const double window = kPi / (2.0 * c.fsr);  // = T/4
    // Just inside on both sides.
    for (double sign : {1.0, -1.0}) {
        auto rec = run_trial(c, dirac_noise(sign * 0.998 * window, 0.0), 3);
        CHECK(rec.success);
    }
    // Just outside and exactly at the boundary.
    for (double u : {1.001 * window, -1.001 * window, window, -window}) {
        auto rec = run_trial(c, dirac_noise(u, 0.0), 3);
        CHECK_FALSE(rec.success);
    }
    // One full half-lattice step past the window lands in the neighbor bin.
    auto rec = run_trial(c, dirac_noise(kPi / c.fsr, 0.0), 3);
    CHECK_FALSE(rec.success);
    CHECK(rec.decoded_index != rec.true_index);
}

TEST_CASE("run_trial: dirac residual is (t + t')/2 exactly") {
    auto c = ec_comb();
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-0.2, 0.2);
    for (int rep = 0; rep < 25; ++rep) {
        const double t = dist(rng), tp = dist(rng);
        auto rec = run_trial(c, dirac_noise(t, tp), 7);
        CHECK(rec.residual_error == 0.5 * (t + tp));
        CHECK(rec.correction == 0.0);
    }
}

TEST_CASE("run_trial: deterministic for a fixed seed") {
    auto c = ec_comb();
    auto noise = gaussian_noise(0.04, 0.03, 0.2);
    auto a = run_trial(c, noise, 123456789);
    auto b = run_trial(c, noise, 123456789);
    CHECK(a.t == b.t);
    CHECK(a.t_prime == b.t_prime);
    CHECK(a.omega == b.omega);
    CHECK(a.omega_prime == b.omega_prime);
    CHECK(a.click_time == b.click_time);
    CHECK(a.true_index == b.true_index);
    CHECK(a.decoded_index == b.decoded_index);
    CHECK(a.residual_error == b.residual_error);

    auto other = run_trial(c, noise, 123456790);
    CHECK(a.t != other.t);
}

TEST_CASE("ec_monte_carlo: dirac offsets inside the window always succeed") {
    auto c = ec_comb();
    const double window = kPi / (2.0 * c.fsr);
    // Sweep the window interior uniformly; every round must decode correctly.
    for (int i = 0; i < 201; ++i) {
        const double u = -0.99 * window + 1.98 * window * i / 200.0;
        auto st = ec_monte_carlo(c, dirac_noise(u * 0.6, -u * 0.4), 3, 11);
        CHECK(st.success_rate == 1.0);
        CHECK(std::abs(st.residual_variance) < 1e-18);  // deterministic shift
    }
}

TEST_CASE("ec_monte_carlo: success-conditioned residual variance matches the posterior") {
    auto c = ec_comb();
    const double ss = 0.04, si = 0.03;
    auto noise = gaussian_noise(ss, si, 0.15);
    const double delta_sq = ss * ss * si * si / (ss * ss + si * si);

    for (long long n : {10000LL, 100000LL}) {
        auto st = ec_monte_carlo(c, noise, n, 42);
        CHECK(st.delta_squared == doctest::Approx(delta_sq).epsilon(1e-12));
        // 3-sigma band for a variance estimate: sd(var) ~ delta^2 sqrt(2/n).
        const double band = 3.0 * delta_sq * std::sqrt(2.0 / static_cast<double>(n));
        CHECK(std::abs(st.success_residual_variance - delta_sq) < band);
        CHECK(std::abs(st.posterior_consistency) < 3.0 * std::sqrt(2.0 / static_cast<double>(n)));
        CHECK(st.success_rate > 0.999);
    }
}

TEST_CASE("ec_monte_carlo: anti-correlated regime inherits the idler width") {
    auto c = ec_comb();
    // Noisy signal, quiet idler: the corrected data inherits the idler scale.
    const double ss = 0.05, si = 0.01;
    auto st = ec_monte_carlo(c, gaussian_noise(ss, si, 0.1), 100000, 7);
    const double resid_std = std::sqrt(st.success_residual_variance);
    CHECK(resid_std == doctest::Approx(si).epsilon(0.03));
    // And the posterior width approaches the idler width in this limit.
    const double delta = std::sqrt(st.delta_squared);
    CHECK(delta == doctest::Approx(si).epsilon(0.02));
}

TEST_CASE("ec_monte_carlo: bitwise deterministic across thread counts") {
    auto c = ec_comb();
    auto noise = gaussian_noise(0.06, 0.02, 0.25);
    auto a = ec_monte_carlo(c, noise, 20000, 99, 1);
    auto b = ec_monte_carlo(c, noise, 20000, 99, 4);
    auto d = ec_monte_carlo(c, noise, 20000, 99, 7);
    CHECK(a.success_rate == b.success_rate);
    CHECK(a.residual_mean == b.residual_mean);
    CHECK(a.residual_variance == b.residual_variance);
    CHECK(a.success_residual_mean == b.success_residual_mean);
    CHECK(a.success_residual_variance == b.success_residual_variance);
    CHECK(a.residual_variance == d.residual_variance);
    CHECK(a.success_residual_variance == d.success_residual_variance);

    auto e = ec_monte_carlo(c, noise, 20000, 100, 1);
    CHECK(a.residual_variance != e.residual_variance);
}

TEST_CASE("posterior invariants hold as algebraic identities") {
    auto c = ec_comb();
    const double T = c.round_trip_time();
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> width(0.01, 0.5);
    std::uniform_real_distribution<double> click(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        const double ss = width(rng), si = width(rng);
        const double tau = click(rng);
        const long long m = static_cast<long long>(rep) - 25;
        auto p = posterior_after_click(gaussian_noise(ss, si), c, tau, m);
        const double sum_sq = ss * ss + si * si;
        CHECK(p.std_dev * p.std_dev == doctest::Approx(ss * ss * si * si / sum_sq).epsilon(1e-14));
        CHECK(p.mean ==
              doctest::Approx((tau + static_cast<double>(m) * T) * ss * ss / sum_sq).epsilon(1e-14));
    }
}
