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

#include "chronocycle/displacement.hpp"
#include "chronocycle/gkp.hpp"
#include "chronocycle/wigner.hpp"
#include "test_helpers.hpp"

using namespace chronocycle;
using namespace chronocycle::testing;

namespace {

CombParams normalized_comb(double tooth_over_fsr, int d = 4) {
    CombParams c;
    c.fsr = kTwoPi;
    c.tooth_width = tooth_over_fsr * c.fsr;
    c.pump_width = 1e-4 * c.fsr;
    c.phasematch_width = 50.0 * c.fsr;
    c.pump_center = 0.0;
    c.peak_count = d;
    c.unit_mode = UnitMode::normalized;
    return c;
}

}  // namespace

TEST_CASE("ideal_gkp: logical zero peak positions") {
    auto st = ideal_gkp(LogicalLabel::zero, GkpBasis::frequency, normalized_comb(0.05), 2);
    REQUIRE(st.peaks.size() == 5);
    const double wbar = st.comb.fsr;
    std::vector<double> expect = {-4.0 * wbar, -2.0 * wbar, 0.0, 2.0 * wbar, 4.0 * wbar};
    for (size_t i = 0; i < st.peaks.size(); ++i) {
        CHECK(st.peak_position(st.peaks[i]) == doctest::Approx(expect[i]));
        CHECK(st.peaks[i].weight == doctest::Approx(1.0 / std::sqrt(5.0)));
    }
}

TEST_CASE("ideal_gkp: minus state alternates signs") {
    auto st = ideal_gkp(LogicalLabel::minus, GkpBasis::frequency, normalized_comb(0.05), 1);
    REQUIRE(st.peaks.size() == 3);
    const double w = 1.0 / std::sqrt(3.0);
    CHECK(st.peak_position(st.peaks[0]) == doctest::Approx(-st.comb.fsr));
    CHECK(st.peaks[0].weight == doctest::Approx(-w));
    CHECK(st.peaks[1].weight == doctest::Approx(w));
    CHECK(st.peaks[2].weight == doctest::Approx(-w));
}

TEST_CASE("ideal_gkp: logical states are exactly orthogonal") {
    auto c = normalized_comb(0.05);
    auto zero = ideal_gkp(LogicalLabel::zero, GkpBasis::frequency, c, 3);
    auto one = ideal_gkp(LogicalLabel::one, GkpBasis::frequency, c, 3);
    CHECK(ideal_overlap(zero, one) == 0.0);
}

TEST_CASE("ideal_gkp: rejects an off-lattice pump") {
    auto c = normalized_comb(0.05);
    c.pump_center = 0.37 * c.fsr;
    CHECK_THROWS_AS(ideal_gkp(LogicalLabel::zero, GkpBasis::frequency, c, 2), SimError);
}

TEST_CASE("physical_gkp: flat envelope leaves a pure gaussian tooth") {
    auto c = normalized_comb(0.08);
    // kappa small enough that the envelope is flat across the central tooth.
    auto st = physical_gkp(LogicalLabel::plus, c, 1e-4 / c.fsr, 8);
    const auto& s = st.spectrum;
    const double delta = s.grid.spacing();
    const int center = static_cast<int>(std::llround((0.0 - s.grid.omega_min) / delta));
    const double peak = std::abs(s.amplitudes[center]);
    for (int off = -20; off <= 20; ++off) {
        const double w = s.grid.omega(center + off);
        const double x = w / c.tooth_width;
        const double expected = peak * std::exp(-0.5 * x * x);
        CHECK(std::abs(s.amplitudes[center + off]) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("physical_gkp: device-scale comb carries about 570 bright teeth") {
    CombParams c;
    c.fsr = kTwoPi * 19.2e9;
    c.tooth_width = c.fsr / 20.0;
    c.pump_width = kTwoPi * 100.0e3;
    c.phasematch_width = kTwoPi * 3.85e12;
    c.pump_center = 0.0;
    c.peak_count = 300;
    const double band = kTwoPi * 10.9e12;
    const double kappa = kappa_for_tooth_count(c, band / c.fsr);
    auto st = physical_gkp(LogicalLabel::plus, c, kappa, 8);
    const int teeth = count_bright_teeth(st);
    CHECK(teeth >= 560);
    CHECK(teeth <= 580);
}

TEST_CASE("physical_gkp: frequency marginal of the Wigner map matches the spectrum") {
    auto c = normalized_comb(1.0 / 12.0);
    auto st = physical_gkp(LogicalLabel::plus, c, 1.2 / c.fsr, 8);
    const auto& s = st.spectrum;
    auto wg = wigner(s, natural_wigner_time_axis(s.grid, 512));
    const auto spectral = marginal(wg, MarginalAxis::time);
    std::vector<double> direct(s.grid.n_points);
    for (int j = 0; j < s.grid.n_points; ++j) direct[j] = std::norm(s.amplitudes[j]);
    CHECK(rel_l2(spectral, direct) < 1e-6);
}

TEST_CASE("z_gate: maps plus onto minus") {
    auto c = normalized_comb(0.01);
    const double kappa = 0.05 / c.fsr;
    auto plus = physical_gkp(LogicalLabel::plus, c, kappa, 8);
    auto minus = physical_gkp(LogicalLabel::minus, c, kappa, 8);
    auto mapped = z_gate(plus);
    CHECK(mapped.label == LogicalLabel::minus);
    const double fidelity = std::norm(inner_product(minus.spectrum, mapped.spectrum));
    CHECK(fidelity >= 0.999);
}

TEST_CASE("z_gate: squares to the round-trip displacement") {
    auto c = normalized_comb(0.01);
    auto plus = physical_gkp(LogicalLabel::plus, c, 0.05 / c.fsr, 8);
    auto twice = z_gate(z_gate(plus));
    CHECK(twice.label == LogicalLabel::plus);

    // Pointwise, z o z is exactly the full round-trip phase.
    const auto expect = shift_time(plus.spectrum, -kTwoPi / c.fsr);
    for (int j = 0; j < plus.spectrum.grid.n_points; ++j)
        CHECK(std::abs(twice.spectrum.amplitudes[j] - expect.amplitudes[j]) < 1e-12);

    // At tooth centers the accumulated phase is a full turn: the state returns
    // to itself there to machine precision; the global overlap is depressed
    // only by the finite tooth width.
    const double delta = plus.spectrum.grid.spacing();
    const long long m_div = std::llround(c.fsr / delta);
    const int center = plus.spectrum.grid.n_points / 2;
    for (int n = -10; n <= 10; ++n) {
        const int idx = center + static_cast<int>(n * m_div);
        const complexd a = plus.spectrum.amplitudes[idx];
        const complexd b = twice.spectrum.amplitudes[idx];
        CHECK(std::abs(b - a) < 1e-9 * std::abs(a) + 1e-15);
    }
    CHECK(std::abs(inner_product(plus.spectrum, twice.spectrum)) >= 0.999);
}

TEST_CASE("z_gate: logical zero is invariant up to tooth-center phase") {
    auto c = normalized_comb(0.01);
    auto zero = physical_gkp(LogicalLabel::zero, c, 0.05 / c.fsr, 8);
    auto mapped = z_gate(zero);
    CHECK(mapped.label == LogicalLabel::zero);
    // Teeth sit on the even lattice: each center acquires e^{i 2 pi n} = 1.
    const double delta = zero.spectrum.grid.spacing();
    const long long m_div = std::llround(c.fsr / delta);
    const int center = zero.spectrum.grid.n_points / 2;
    for (int n = -10; n <= 10; n += 2) {
        const int idx = center + static_cast<int>(n * m_div);
        const complexd a = zero.spectrum.amplitudes[idx];
        const complexd b = mapped.spectrum.amplitudes[idx];
        CHECK(std::abs(b - a) < 1e-9 * std::abs(a) + 1e-15);
    }
    CHECK(std::abs(inner_product(zero.spectrum, mapped.spectrum)) >= 0.999);
}

TEST_CASE("stabilizer_expectation: exactly one for ideal code states") {
    auto c = normalized_comb(0.05);
    for (int d : {1, 2, 5, 9}) {
        auto zero = ideal_gkp(LogicalLabel::zero, GkpBasis::frequency, c, d);
        const complexd fs = stabilizer_expectation(zero, StabilizerKind::frequency_stab);
        const complexd ts = stabilizer_expectation(zero, StabilizerKind::time_stab);
        CHECK(fs.real() == 1.0);
        CHECK(fs.imag() == 0.0);
        CHECK(ts.real() == 1.0);
        CHECK(ts.imag() == 0.0);
    }
    // The frequency stabilizer fixes every logical label exactly.
    for (auto label : {LogicalLabel::one, LogicalLabel::plus, LogicalLabel::minus}) {
        auto st = ideal_gkp(label, GkpBasis::frequency, c, 4);
        CHECK(stabilizer_expectation(st, StabilizerKind::frequency_stab) == complexd(1.0, 0.0));
    }
    // The half-round-trip phase operator reads the logical Z eigenvalue.
    auto one = ideal_gkp(LogicalLabel::one, GkpBasis::frequency, c, 4);
    CHECK(stabilizer_expectation(one, StabilizerKind::time_stab) == complexd(-1.0, 0.0));
}

TEST_CASE("stabilizer_expectation: physical state with small noise stays near one") {
    auto c = normalized_comb(0.01);
    auto st = physical_gkp(LogicalLabel::zero, c, 0.01 / c.fsr, 8);
    const complexd fs = stabilizer_expectation(st, StabilizerKind::frequency_stab);
    const complexd ts = stabilizer_expectation(st, StabilizerKind::time_stab);
    CHECK(fs.real() > 0.95);
    CHECK(ts.real() > 0.95);
}

TEST_CASE("stabilizer_expectation: single tooth against the gaussian characteristic function") {
    auto c = normalized_comb(0.04);
    PhysicalGkpState st;
    st.comb = c;
    st.kappa = 1e-6;
    FrequencyGrid g = make_centered_grid(4.0 * c.fsr, 4096, UnitMode::normalized);
    st.spectrum = gaussian_state(0.0, c.tooth_width, g);
    const complexd ts = stabilizer_expectation(st, StabilizerKind::time_stab);
    // |chi(0, tau)| for a gaussian tooth: exp(-dw^2 tau^2 / 4).
    const double tau = kPi / c.fsr;
    const double expected = std::exp(-c.tooth_width * c.tooth_width * tau * tau / 4.0);
    CHECK(std::abs(ts) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::abs(ts) < 1.0);
}

TEST_CASE("ideal_gkp: time-basis states live on the half round-trip lattice") {
    auto c = normalized_comb(0.05);
    auto zero_t = ideal_gkp(LogicalLabel::zero, GkpBasis::time, c, 2);
    REQUIRE(zero_t.peaks.size() == 5);
    // Lattice constant tau_rt/2, logical zero on even multiples.
    const double step = kPi / c.fsr;
    CHECK(zero_t.lattice_constant() == doctest::Approx(step));
    for (size_t i = 0; i < zero_t.peaks.size(); ++i)
        CHECK(zero_t.peak_position(zero_t.peaks[i]) ==
              doctest::Approx((2.0 * (static_cast<double>(i) - 2.0)) * step));

    // The frequency stabilizer phases time peaks by full turns: exactly one.
    CHECK(stabilizer_expectation(zero_t, StabilizerKind::frequency_stab) == complexd(1.0, 0.0));
    // The time stabilizer shifts the lattice by one unit: zero maps onto the
    // odd sublattice (orthogonal), plus is invariant, minus flips sign.
    CHECK(stabilizer_expectation(zero_t, StabilizerKind::time_stab) == complexd(0.0, 0.0));
    auto plus_t = ideal_gkp(LogicalLabel::plus, GkpBasis::time, c, 3);
    auto minus_t = ideal_gkp(LogicalLabel::minus, GkpBasis::time, c, 3);
    CHECK(stabilizer_expectation(plus_t, StabilizerKind::time_stab) == complexd(1.0, 0.0));
    CHECK(stabilizer_expectation(minus_t, StabilizerKind::time_stab) == complexd(-1.0, 0.0));

    auto [p0, p1] = logical_readout(zero_t, GkpBasis::time);
    CHECK(p0 == 1.0);
    CHECK(p1 == 0.0);
}

TEST_CASE("logical_readout: ideal states decode exactly") {
    auto c = normalized_comb(0.05);
    auto zero = ideal_gkp(LogicalLabel::zero, GkpBasis::frequency, c, 3);
    auto [p0, p1] = logical_readout(zero, GkpBasis::frequency);
    CHECK(p0 == 1.0);
    CHECK(p1 == 0.0);
}

TEST_CASE("logical_readout: sharp physical one state") {
    auto c = normalized_comb(0.01);
    auto one = physical_gkp(LogicalLabel::one, c, 0.05 / c.fsr, 8);
    auto [p0, p1] = logical_readout(one, GkpBasis::frequency);
    CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p1 > 0.999);
}

TEST_CASE("logical_readout: plus state splits evenly in the frequency basis") {
    auto c = normalized_comb(0.02);
    auto plus = physical_gkp(LogicalLabel::plus, c, 0.02 / c.fsr, 8);
    auto [p0, p1] = logical_readout(plus, GkpBasis::frequency);
    CHECK(std::abs(p0 - 0.5) < 0.01);
    CHECK(std::abs(p1 - 0.5) < 0.01);
}

TEST_CASE("invariant: Wigner sign pattern of the physical plus state") {
    auto c = normalized_comb(0.02);
    auto st = physical_gkp(LogicalLabel::plus, c, 0.05 / c.fsr, 8);
    const double wbar = c.fsr;
    const double t_step = kPi / wbar;  // tau_rt / 2
    for (int n = -4; n <= 4; ++n) {
        for (int m = -4; m <= 4; ++m) {
            const double v = wigner_at(st.spectrum, 0.5 * m * wbar, n * t_step);
            const int expected_sign = (n % 2 != 0 && m % 2 != 0) ? -1 : 1;
            INFO("n=", n, " m=", m, " W=", v);
            CHECK(v * expected_sign > 1e-6);
        }
    }
}

TEST_CASE("invariant: frequency-basis zero lives on the half round-trip time lattice") {
    auto c = normalized_comb(0.01);
    auto st = physical_gkp(LogicalLabel::zero, c, 0.05 / c.fsr, 8);
    auto ta = to_time_domain(st.spectrum);
    const double lattice = kPi / c.fsr;  // tau_rt / 2
    const double halo = 6.0 * st.kappa;  // temporal tooth scale is kappa
    const auto w = trapezoid_weights(ta.grid.n_points, ta.grid.spacing());
    double inside = 0.0, total = 0.0;
    for (int k = 0; k < ta.grid.n_points; ++k) {
        const double t = ta.grid.t(k);
        const double e = w[k] * std::norm(ta.amplitudes[k]);
        total += e;
        const double dist = std::abs(t - lattice * std::round(t / lattice));
        if (dist <= halo) inside += e;
    }
    CHECK(inside / total > 0.99);
}

TEST_CASE("invariant: z_gate commutes with the frequency stabilizer") {
    auto c = normalized_comb(0.02);
    auto st = physical_gkp(LogicalLabel::plus, c, 0.05 / c.fsr, 8);
    const complexd before = stabilizer_expectation(st, StabilizerKind::frequency_stab);
    const complexd after = stabilizer_expectation(z_gate(st), StabilizerKind::frequency_stab);
    CHECK(std::abs(before - after) < 1e-9);
}

TEST_CASE("invariant: noise composition order changes the state") {
    // Envelope-after-teeth (the implemented form) vs teeth weighted by the
    // envelope sampled at their centers (the commuted order).
    auto c = normalized_comb(0.1);
    const double kappa = 0.3 / c.fsr;
    auto st = physical_gkp(LogicalLabel::plus, c, kappa, 8);

    const auto& g = st.spectrum.grid;
    auto alt = sample_spectrum(g, [&](double w) {
        const long long n0 = std::llround(w / c.fsr);
        complexd acc = 0.0;
        for (long long n = n0 - 6; n <= n0 + 6; ++n) {
            const double x = (w - n * c.fsr) / c.tooth_width;
            const double envelope_at_center =
                std::exp(-0.5 * (n * c.fsr) * (n * c.fsr) * kappa * kappa);
            acc += envelope_at_center * std::exp(-0.5 * x * x);
        }
        return acc;
    });
    alt = normalize(alt);
    const double fidelity = std::norm(inner_product(st.spectrum, alt));
    CHECK(fidelity < 1.0 - 1e-6);
    CHECK(fidelity > 0.9);  // same family, small deformation
}
