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

#ifndef CHRONOCYCLE_DISPLACEMENT_HPP
#define CHRONOCYCLE_DISPLACEMENT_HPP

#include "chronocycle/spectrum.hpp"

namespace chronocycle {

// Displacement algebra on sampled spectra.
//
//   frequency shift D(mu):   S(w) -> S(w - mu)        (state moves up by mu)
//   time shift     T(tau):   S(w) -> e^{-i w tau} S(w)
//
// With these conventions D(mu) T(tau) = e^{i mu tau} T(tau) D(mu).
// Orderings: normal = D(mu) T(tau); antinormal = T(tau) D(mu);
// symmetric = normal * e^{-i mu tau / 2}.

enum class Ordering { normal, antinormal, symmetric };

struct DisplacementSpec {
    double mu = 0.0;   // frequency shift
    double tau = 0.0;  // time shift
    Ordering ordering = Ordering::normal;
};

/// Pure frequency shift by mu (band-limited, exact for on-grid states whose
/// energy stays away from the grid edges). Throws OffGridShift when more than
/// `loss_tol` of the energy sits within |mu| of a grid edge.
SampledSpectrum shift_frequency(const SampledSpectrum& s, double mu, double loss_tol = 1e-6);

/// Pure time shift: multiplies by e^{-i w tau}.
SampledSpectrum shift_time(const SampledSpectrum& s, double tau);

/// Applies the displacement in the requested operator ordering.
SampledSpectrum displace(const SampledSpectrum& s, const DisplacementSpec& spec,
                         double loss_tol = 1e-6);

/// Characteristic function chi(mu, tau) = <psi| D^dagger |psi> = <D psi | psi>.
complexd characteristic_function(const SampledSpectrum& s, const DisplacementSpec& spec);

}  // namespace chronocycle

#endif
