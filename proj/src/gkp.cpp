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

#include "chronocycle/gkp.hpp"

#include <algorithm>
#include <cmath>

#include "chronocycle/displacement.hpp"

namespace chronocycle {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

/// Weight pattern of the infinite lattice state at integer index j.
double lattice_pattern(LogicalLabel label, long long j) {
    const bool even = ((j % 2) == 0);
    switch (label) {
        case LogicalLabel::zero: return even ? 1.0 : 0.0;
        case LogicalLabel::one: return even ? 0.0 : 1.0;
        case LogicalLabel::plus: return 1.0;
        case LogicalLabel::minus: return even ? 1.0 : -1.0;
    }
    return 0.0;
}

/// Exact unit quarter turns: exp(-i * q * pi/2) for integer q.
complexd quarter_turn(long long q) {
    switch (((q % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

}  // namespace

double IdealGkpState::lattice_constant() const {
    return basis == GkpBasis::frequency ? comb.fsr : kPi / comb.fsr;
}

double IdealGkpState::offset() const {
    return basis == GkpBasis::frequency ? 0.5 * comb.pump_center : 0.0;
}

IdealGkpState ideal_gkp(LogicalLabel label, GkpBasis basis, const CombParams& comb, int d) {
    comb.validate();
    if (d < 1) throw SimError(ErrorCode::InvalidArgument, "ideal_gkp needs d >= 1");
    if (!comb.pump_on_lattice())
        throw SimError(ErrorCode::BadPumpCenter, "pump center must be a multiple of the fsr");

    IdealGkpState st;
    st.label = label;
    st.basis = basis;
    st.comb = comb;
    st.truncation = d;

    std::vector<long long> indices;
    switch (label) {
        case LogicalLabel::zero:
            for (int n = -d; n <= d; ++n) indices.push_back(2LL * n);
            break;
        case LogicalLabel::one:
            for (int n = -d; n <= d; ++n) indices.push_back(2LL * n + 1);
            break;
        case LogicalLabel::plus:
        case LogicalLabel::minus:
            for (int n = -d; n <= d; ++n) indices.push_back(n);
            break;
    }
    const double w = 1.0 / std::sqrt(static_cast<double>(indices.size()));
    for (long long j : indices) st.peaks.push_back({j, w * lattice_pattern(label, j)});
    return st;
}

double ideal_overlap(const IdealGkpState& a, const IdealGkpState& b) {
    if (a.basis != b.basis)
        throw SimError(ErrorCode::InvalidArgument, "ideal_overlap needs a common basis");
    double acc = 0.0;
    for (const auto& pa : a.peaks)
        for (const auto& pb : b.peaks)
            if (pa.lattice_index == pb.lattice_index) acc += pa.weight * pb.weight;
    return acc;
}

PhysicalGkpState physical_gkp(LogicalLabel label, const CombParams& comb, double kappa,
                              int points_per_tooth) {
    comb.validate();
    if (!(kappa > 0.0)) throw SimError(ErrorCode::InvalidArgument, "kappa must be positive");
    if (!(comb.tooth_width > 0.0))
        throw SimError(ErrorCode::InvalidArgument, "tooth width must be positive");
    if (points_per_tooth < 8)
        throw SimError(ErrorCode::GridTooCoarse, "physical_gkp needs >= 8 points per tooth");
    if (!comb.pump_on_lattice())
        throw SimError(ErrorCode::BadPumpCenter, "pump center must be a multiple of the fsr");

    const double wbar = comb.fsr;
    const double dw_tooth = comb.tooth_width;

    // Grid spacing divides fsr/2 so lattice and half-lattice points are grid
    // points; an even tooth divisor M keeps that exact.
    int m_div = 2 * static_cast<int>(std::ceil(0.5 * points_per_tooth * wbar / dw_tooth));
    m_div = std::max(m_div, 8);
    const double delta = wbar / m_div;

    // Envelope support: amplitude e^{-w^2 kappa^2/2} down to 1e-8, plus tooth tails.
    const double omega_cut = 6.1 / kappa + 8.0 * dw_tooth + 2.0 * wbar +
                             0.5 * std::abs(comb.pump_center);
    long long half_points = static_cast<long long>(std::ceil(omega_cut / delta));
    // Round the point count to a multiple of 2*M so the dual time grid hits
    // the tau_rt/2 lattice exactly.
    long long n_ll = 2 * half_points;
    n_ll = 2LL * m_div * ((n_ll + 2 * m_div - 1) / (2 * m_div));
    if (n_ll > (1LL << 24))
        throw SimError(ErrorCode::GridTooCoarse,
                       "physical_gkp grid would exceed 2^24 points; loosen the parameters");
    const int n = static_cast<int>(n_ll);

    FrequencyGrid grid = make_centered_grid(0.5 * n * delta, n, comb.unit_mode);

    SampledSpectrum s;
    s.grid = grid;
    s.amplitudes.assign(n, complexd(0.0, 0.0));

    const double center = 0.5 * comb.pump_center;
    const long long j_max = static_cast<long long>(std::ceil((6.1 / kappa) / wbar)) + 1;
    const int tail_bins = static_cast<int>(std::ceil(8.0 * dw_tooth / delta));
    for (long long j = -j_max; j <= j_max; ++j) {
        const double sign = lattice_pattern(label, j);
        if (sign == 0.0) continue;
        const double pos = center + j * wbar;
        const int jc = static_cast<int>(std::llround((pos - grid.omega_min) / delta));
        const int lo = std::max(0, jc - tail_bins);
        const int hi = std::min(n - 1, jc + tail_bins);
        for (int i = lo; i <= hi; ++i) {
            const double x = (grid.omega(i) - pos) / dw_tooth;
            s.amplitudes[i] += sign * std::exp(-0.5 * x * x);
        }
    }
    for (int i = 0; i < n; ++i) {
        const double w = grid.omega(i);
        s.amplitudes[i] *= std::exp(-0.5 * w * w * kappa * kappa);
    }

    PhysicalGkpState st;
    st.spectrum = normalize(s);
    st.kappa = kappa;
    st.comb = comb;
    st.label = label;
    return st;
}

double kappa_for_tooth_count(const CombParams& comb, double tooth_count) {
    // Intensity envelope e^{-w^2 kappa^2} stays above e^-2 for |w| < sqrt(2)/kappa.
    return 2.0 * std::sqrt(2.0) / (tooth_count * comb.fsr);
}

int count_bright_teeth(const PhysicalGkpState& state) {
    const auto& g = state.spectrum.grid;
    const double delta = g.spacing();
    const double wbar = state.comb.fsr;
    const long long m_div = std::llround(wbar / delta);
    const double center = 0.5 * state.comb.pump_center;
    const long long c_idx = std::llround((center - g.omega_min) / delta);

    const long long j_lo = -(c_idx / m_div);
    const long long j_hi = (g.n_points - 1 - c_idx) / m_div;
    std::vector<double> peak_intensity;
    for (long long j = j_lo; j <= j_hi; ++j) {
        const long long idx = c_idx + j * m_div;
        if (idx < 0 || idx >= g.n_points) continue;
        peak_intensity.push_back(std::norm(state.spectrum.amplitudes[static_cast<int>(idx)]));
    }
    if (peak_intensity.empty()) return 0;
    const double top = *std::max_element(peak_intensity.begin(), peak_intensity.end());
    const double floor = std::exp(-2.0) * top;
    int count = 0;
    for (double v : peak_intensity)
        if (v > floor) ++count;
    return count;
}

PhysicalGkpState z_gate(const PhysicalGkpState& state) {
    PhysicalGkpState out = state;
    out.spectrum = shift_time(state.spectrum, -kPi / state.comb.fsr);
    if (state.label == LogicalLabel::plus)
        out.label = LogicalLabel::minus;
    else if (state.label == LogicalLabel::minus)
        out.label = LogicalLabel::plus;
    return out;
}

complexd stabilizer_expectation(const IdealGkpState& state, StabilizerKind which) {
    // Works on the integer lattice so eigenvalues come out exact. The
    // frequency stabilizer shifts frequency-basis peaks by two lattice units
    // and phases time-basis peaks by full turns; the time stabilizer phases
    // frequency-basis peaks by (-1)^j times a quarter-turn from the pump
    // offset, and shifts time-basis peaks by one unit.
    // All non-zero peak weights share one magnitude, so expectations reduce to
    // integer pattern sums; the common scale cancels exactly.
    const bool freq_basis = (state.basis == GkpBasis::frequency);
    if ((which == StabilizerKind::frequency_stab && freq_basis) ||
        (which == StabilizerKind::time_stab && !freq_basis)) {
        // Lattice shift: +2 units (frequency stabilizer) or +1 unit (time).
        const long long shift = (which == StabilizerKind::frequency_stab) ? 2 : 1;
        double num = 0.0, den = 0.0;
        for (const auto& p : state.peaks) {
            const double pj = lattice_pattern(state.label, p.lattice_index);
            num += lattice_pattern(state.label, p.lattice_index + shift) * pj;
            den += pj * pj;
        }
        return complexd(num / den, 0.0);
    }

    if (which == StabilizerKind::frequency_stab && !freq_basis) {
        // Phase e^{i 2 fsr t_j} with t_j = j pi / fsr: full turns, exactly +1.
        return complexd(1.0, 0.0);
    }

    // Time stabilizer on a frequency-basis state: phase e^{-i w_j pi/fsr}
    // with w_j = pump/2 + j fsr = (k/2 + j) fsr.
    const long long k = std::llround(state.comb.pump_center / state.comb.fsr);
    double num = 0.0, den = 0.0;
    for (const auto& p : state.peaks) {
        const double pj = lattice_pattern(state.label, p.lattice_index);
        const double sgn = (p.lattice_index % 2 == 0) ? 1.0 : -1.0;
        num += pj * pj * sgn;
        den += pj * pj;
    }
    return quarter_turn(k) * (num / den);
}

complexd stabilizer_expectation(const PhysicalGkpState& state, StabilizerKind which) {
    const auto& s = state.spectrum;
    const int n = s.grid.n_points;
    const auto w = trapezoid_weights(n, s.grid.spacing());
    if (which == StabilizerKind::time_stab) {
        const double tau = kPi / state.comb.fsr;
        complexd acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += w[j] * std::norm(s.amplitudes[j]) * std::polar(1.0, -s.grid.omega(j) * tau);
        return acc;
    }
    // <psi| D(2 fsr) |psi> = Int S*(w) S(w - 2 fsr) dw; 2 fsr is an exact
    // number of bins by construction of the physical grid.
    const double shift = 2.0 * state.comb.fsr / s.grid.spacing();
    const long long bins = std::llround(shift);
    if (std::abs(shift - static_cast<double>(bins)) > 1e-9) {
        const SampledSpectrum moved = shift_frequency(s, 2.0 * state.comb.fsr);
        return inner_product(s, moved);
    }
    complexd acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const long long src = j - bins;
        if (src < 0 || src >= n) continue;
        acc += w[j] * std::conj(s.amplitudes[j]) * s.amplitudes[static_cast<int>(src)];
    }
    return acc;
}

namespace {

LogicalLabel dual_label(LogicalLabel l) {
    switch (l) {
        case LogicalLabel::zero: return LogicalLabel::plus;
        case LogicalLabel::one: return LogicalLabel::minus;
        case LogicalLabel::plus: return LogicalLabel::zero;
        case LogicalLabel::minus: return LogicalLabel::one;
    }
    return LogicalLabel::zero;
}

std::pair<double, double> readout_density(const std::vector<double>& axis_value,
                                          const std::vector<double>& density_weighted,
                                          double lattice, double offset) {
    double p0 = 0.0, p1 = 0.0;
    for (size_t i = 0; i < axis_value.size(); ++i) {
        const double f = (axis_value[i] - offset) / lattice;
        double r = std::round(f);
        const double frac = f - r;
        bool even = (std::llround(r) % 2) == 0;
        if (std::abs(std::abs(frac) - 0.5) < 1e-12) even = true;  // ties -> logical 0
        (even ? p0 : p1) += density_weighted[i];
    }
    const double total = p0 + p1;
    return {p0 / total, p1 / total};
}

}  // namespace

std::pair<double, double> logical_readout(const IdealGkpState& state, GkpBasis basis) {
    IdealGkpState eff = state;
    if (basis != state.basis) {
        const long long k = std::llround(state.comb.pump_center / state.comb.fsr);
        if (k % 4 != 0)
            throw SimError(ErrorCode::InvalidArgument,
                           "cross-basis ideal readout requires the pump on the 4*fsr lattice");
        eff = ideal_gkp(dual_label(state.label), basis, state.comb, state.truncation);
    }
    double p0 = 0.0, p1 = 0.0;
    for (const auto& p : eff.peaks)
        ((p.lattice_index % 2 == 0) ? p0 : p1) += p.weight * p.weight;
    const double total = p0 + p1;
    return {p0 / total, p1 / total};
}

std::pair<double, double> logical_readout(const PhysicalGkpState& state, GkpBasis basis) {
    if (basis == GkpBasis::frequency) {
        const auto& s = state.spectrum;
        const auto w = trapezoid_weights(s.grid.n_points, s.grid.spacing());
        std::vector<double> x(s.grid.n_points), d(s.grid.n_points);
        for (int j = 0; j < s.grid.n_points; ++j) {
            x[j] = s.grid.omega(j);
            d[j] = w[j] * std::norm(s.amplitudes[j]);
        }
        return readout_density(x, d, state.comb.fsr, 0.5 * state.comb.pump_center);
    }
    const TemporalAmplitude ta = to_time_domain(state.spectrum);
    const auto w = trapezoid_weights(ta.grid.n_points, ta.grid.spacing());
    std::vector<double> x(ta.grid.n_points), d(ta.grid.n_points);
    for (int j = 0; j < ta.grid.n_points; ++j) {
        x[j] = ta.grid.t(j);
        d[j] = w[j] * std::norm(ta.amplitudes[j]);
    }
    return readout_density(x, d, kPi / state.comb.fsr, 0.0);
}

}  // namespace chronocycle
