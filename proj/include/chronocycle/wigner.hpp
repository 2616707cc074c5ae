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

#ifndef CHRONOCYCLE_WIGNER_HPP
#define CHRONOCYCLE_WIGNER_HPP

#include "chronocycle/spectrum.hpp"

namespace chronocycle {

// Chronocyclic Wigner distribution of a pure spectral amplitude:
//
//   W(w, t) = (1/pi) Int dv e^{2 i v t} S(w - v) S*(w + v)
//
// The 1/pi prefactor is what makes both marginals exact:
//   Int W dt = |S(w)|^2,   Int W dw = |S~(t)|^2,  and  Int Int W = 1.
// The symmetric +-v pairing keeps the sum real by construction.

struct WignerGrid {
    FrequencyGrid omega_axis;
    TimeGrid t_axis;
    Array2D<double> values;  // rows: omega, cols: t
};

/// Wigner map on the state's own frequency grid and the given time axis.
WignerGrid wigner(const SampledSpectrum& s, const TimeGrid& t_axis);

/// Point evaluation. `omega` must land on the state's grid or the half-grid
/// (offset by spacing/2), where the symmetric product uses on-grid samples.
double wigner_at(const SampledSpectrum& s, double omega, double t);

/// A time axis resolving the dual window of the grid, n_points samples.
TimeGrid natural_wigner_time_axis(const FrequencyGrid& g, int n_points);

/// Which variable gets integrated out.
enum class MarginalAxis { time, frequency };

/// marginal(w, time) integrates over t and returns the spectral density on the
/// omega axis; marginal(w, frequency) integrates over omega and returns the
/// arrival-time density on the t axis.
std::vector<double> marginal(const WignerGrid& w, MarginalAxis axis);

}  // namespace chronocycle

#endif
