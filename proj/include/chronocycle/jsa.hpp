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

#ifndef CHRONOCYCLE_JSA_HPP
#define CHRONOCYCLE_JSA_HPP

#include <variant>
#include <vector>

#include "chronocycle/cavity.hpp"
#include "chronocycle/spectrum.hpp"

namespace chronocycle {

// Cavity-SPDC joint spectral amplitude:
//
//   JSA(ws, wi) = f+((ws+wi)/2) f-((ws-wi)/2) f_cav(ws) f_cav(wi)
//
// f+ Gaussian of width pump_width centered at pump_center/2 (energy
// conservation), f- Gaussian of width phasematch_width centered at zero
// (phase matching). All frequencies relative to degeneracy.

struct JointSpectralAmplitude {
    FrequencyGrid s_grid;
    FrequencyGrid i_grid;
    Array2D<complexd> amplitudes;  // rows: omega_s, cols: omega_i
    CombParams params;
    CavityModel cavity;

    double norm() const;
};

/// Monochromatic-pump limit (pump_width -> 0): the JSA collapses onto the
/// anti-diagonal ridge omega_s + omega_i = pump_center and is carried by the
/// 1-D amplitude g(nu) over nu = omega_s - omega_i:
///
///   g(nu) = f-(nu/2) f_cav^s((pump+nu)/2) f_cav^i((pump-nu)/2)
struct DegenerateJsa {
    FrequencyGrid nu_grid;  // symmetric, even point count, nu=0 on-grid
    std::vector<complexd> amplitudes;
    CombParams params;
    CavityModel cavity;

    double norm() const;
};

using JsaModel = std::variant<JointSpectralAmplitude, DegenerateJsa>;

/// Normalized product-form JSA on the given grids. Throws EnvelopeClipped when
/// more than 1e-3 of the energy sits on the grid boundary ring, GridTooCoarse
/// when the spacing cannot resolve the cavity teeth.
JointSpectralAmplitude build_jsa(const CombParams& params, const CavityModel& cavity,
                                 const FrequencyGrid& s_grid, const FrequencyGrid& i_grid);

/// Normalized 1-D ridge amplitude for the anti-correlated limit.
DegenerateJsa build_degenerate_jsa(const CombParams& params, const CavityModel& cavity,
                                   int points_per_tooth = 16, double envelope_sigmas = 6.0);

/// Dispatch: 1-D representation when pump_width vanishes (or is negligible
/// against the phase-matching width), full 2-D otherwise.
JsaModel build_jsa_model(const CombParams& params, const CavityModel& cavity,
                         const FrequencyGrid& s_grid, const FrequencyGrid& i_grid);

struct JointIntensityGrid {
    bool time_domain = false;
    FrequencyGrid omega_s_axis, omega_i_axis;  // valid when !time_domain
    TimeGrid t_s_axis, t_i_axis;               // valid when time_domain
    Array2D<double> values;
};

/// |JSA|^2, normalized to unit measure.
JointIntensityGrid jsi(const JointSpectralAmplitude& j);

/// |2-D Fourier transform of the JSA|^2 on the dual time grids, normalized.
JointIntensityGrid jti(const JointSpectralAmplitude& j);

/// Arrival-time-difference density of the degenerate state: the JTI depends
/// only on u = t_s - t_i and equals |g~(u/2)|^2 / 2.
struct DifferenceTimeProfile {
    TimeGrid u_axis;
    std::vector<double> density;
};
DifferenceTimeProfile degenerate_jti_profile(const DegenerateJsa& j);

/// R = (1/dw-^2 - 1/dwp^2) / (1/dw-^2 + 1/dwp^2).
double ellipticity(const CombParams& params);

}  // namespace chronocycle

#endif
