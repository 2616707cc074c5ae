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

#ifndef CHRONOCYCLE_SPECTRUM_HPP
#define CHRONOCYCLE_SPECTRUM_HPP

#include <complex>
#include <functional>
#include <vector>

#include "chronocycle/grid.hpp"

namespace chronocycle {

// Single-photon spectral amplitude S(omega) sampled on a uniform grid.
// Fourier convention throughout:  S~(t) = (1/sqrt(2*pi)) Int S(w) e^{-iwt} dw.

struct SampledSpectrum {
    FrequencyGrid grid;
    std::vector<complexd> amplitudes;

    /// Trapezoidal L2 norm sqrt(sum w_j |S_j|^2).
    double norm() const;
};

struct TemporalAmplitude {
    TimeGrid grid;
    std::vector<complexd> amplitudes;

    double norm() const;
};

/// <a|b> with the trapezoidal measure of a's grid; grids must match.
complexd inner_product(const SampledSpectrum& a, const SampledSpectrum& b);
complexd inner_product(const TemporalAmplitude& a, const TemporalAmplitude& b);

/// Builds a spectrum by sampling a callable on the grid (no normalization).
SampledSpectrum sample_spectrum(const FrequencyGrid& grid,
                                const std::function<complexd(double)>& f);

/// Rescales to unit trapezoidal L2 norm. Throws ZeroState on an all-zero input.
SampledSpectrum normalize(const SampledSpectrum& s);

/// Discrete version of the continuum Fourier transform above, evaluated on the
/// dual grid t_k = (k - N/2) * 2*pi/(N*dw). Throws GridTooCoarse when the time
/// window cannot hold the state (estimated from the spectral roughness; see
/// implementation notes) or when the frequency grid clips the state.
TemporalAmplitude to_time_domain(const SampledSpectrum& s);

/// Direct-quadrature evaluation of S~(t) at one point.
complexd temporal_amplitude_at(const SampledSpectrum& s, double t);

/// Time axis used by to_time_domain for this grid.
TimeGrid dual_time_grid(const FrequencyGrid& g);

}  // namespace chronocycle

#endif
