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

#ifndef CHRONOCYCLE_COMB_HPP
#define CHRONOCYCLE_COMB_HPP

#include <cmath>

#include "chronocycle/grid.hpp"

namespace chronocycle {

/// Physical constants of a biphoton frequency comb. All frequencies are
/// angular (rad/s in SI mode); frequencies are measured relative to the
/// degeneracy point, so the pump sits at `pump_center` (0 for a degenerate
/// pump) and the cavity teeth at integer multiples of `fsr`.
struct CombParams {
    double fsr = 0.0;               // tooth spacing, omega-bar
    double tooth_width = 0.0;       // Gaussian tooth std, delta-omega
    double pump_width = 0.0;        // energy-conservation width of f+
    double phasematch_width = 0.0;  // phase-matching width of f-
    double pump_center = 0.0;       // omega_p
    int peak_count = 0;             // d, truncation order
    UnitMode unit_mode = UnitMode::si;

    double round_trip_time() const { return kTwoPi_ / fsr; }

    /// The closed-form coincidence expressions assume fsr/tooth_width >> 1.
    bool high_finesse() const { return fsr / tooth_width > 10.0; }

    /// Logical GKP encoding requires the pump to sit on the comb lattice.
    bool pump_on_lattice() const {
        const double q = pump_center / fsr;
        return std::abs(q - std::round(q)) < 1e-9;
    }

    void validate() const {
        if (!(fsr > 0.0)) throw SimError(ErrorCode::InvalidArgument, "fsr must be positive");
        if (tooth_width < 0.0 || pump_width < 0.0 || phasematch_width < 0.0)
            throw SimError(ErrorCode::InvalidArgument, "comb widths must be non-negative");
        if (peak_count < 0)
            throw SimError(ErrorCode::InvalidArgument, "peak_count must be non-negative");
    }

    /// Rescales so that fsr = 2*pi exactly (times in round-trip units).
    CombParams to_normalized() const {
        CombParams out = *this;
        const double s = kTwoPi_ / fsr;
        out.fsr = kTwoPi_;
        out.tooth_width = tooth_width * s;
        out.pump_width = pump_width * s;
        out.phasematch_width = phasematch_width * s;
        out.pump_center = pump_center * s;
        out.unit_mode = UnitMode::normalized;
        return out;
    }

    /// Inverse of to_normalized given the original SI free spectral range.
    CombParams to_si(double fsr_si) const {
        CombParams out = *this;
        const double s = fsr_si / fsr;
        out.fsr = fsr_si;
        out.tooth_width = tooth_width * s;
        out.pump_width = pump_width * s;
        out.phasematch_width = phasematch_width * s;
        out.pump_center = pump_center * s;
        out.unit_mode = UnitMode::si;
        return out;
    }

  private:
    static constexpr double kTwoPi_ = 6.283185307179586476925286766559;
};

}  // namespace chronocycle

#endif
