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

#ifndef CHRONOCYCLE_CAVITY_HPP
#define CHRONOCYCLE_CAVITY_HPP

#include "chronocycle/comb.hpp"

namespace chronocycle {

// Cavity transmission models. The Gaussian comb is the high-finesse stand-in;
// the Fabry-Perot model is the physical one:
//
//   A(w) = (1 - r^2) e^{i phi(w)} / (1 - r^2 e^{2 i phi(w)})
//   phi(w) = pi * w / fsr_pol + beta2 * w^2
//
// with w measured from degeneracy. Chromatic dispersion enters as the
// quadratic phase coefficient beta2; birefringence as a polarization-dependent
// free spectral range fsr_pol = fsr +- biref_fsr_offset/2 (signal/idler ride
// different comb lattices). Peak transmission is 1 at resonance either way.

enum class CavityKind { gaussian_comb, fabry_perot };

// Calibrated phenomenological defaults for the integrated-device model
// (19.2 GHz comb over a 10.9 THz band). With these values the unfiltered
// first-replica visibility at r = 0.3 sits near 0.15, every
// visibility-vs-reflectivity curve peaks at an interior reflectivity, and a
// 500-tooth filter recovers visibilities above 0.8.
inline constexpr double kDeviceDispersionBeta2 = 8.5e-28;  // s^2/rad
inline constexpr double kDeviceBirefFsrOffsetHz = 4.0e6;   // Hz

struct CavityModel {
    CavityKind kind = CavityKind::gaussian_comb;
    CombParams comb;
    double reflectivity = 0.0;      // amplitude reflectivity r, fabry_perot only
    double dispersion = 0.0;        // beta2, quadratic single-pass phase coefficient
    double biref_fsr_offset = 0.0;  // fsr(signal) - fsr(idler)
    double fsr_shift = 0.0;         // applied per-polarization; see signal/idler_cavity

    void validate() const {
        comb.validate();
        if (kind == CavityKind::fabry_perot && !(reflectivity >= 0.0 && reflectivity < 1.0))
            throw SimError(ErrorCode::InvalidArgument, "reflectivity must be in [0, 1)");
    }
};

/// Complex transmission amplitude at omega (relative to degeneracy).
complexd cavity_function(const CavityModel& model, double omega);

/// Polarization-resolved variants: half the birefringent offset each way.
CavityModel signal_cavity(const CavityModel& model);
CavityModel idler_cavity(const CavityModel& model);

/// High-finesse analytic intensity linewidth fsr*(1-r^2)/(pi*r).
double airy_fwhm_analytic(double fsr, double r);

/// Numerically measured intensity FWHM of the Airy tooth (no dispersion).
double airy_fwhm_numeric(double fsr, double r);

/// Gaussian tooth std matching the area of |A| over one free spectral range.
double equivalent_gaussian_tooth_width(double fsr, double r);

}  // namespace chronocycle

#endif
