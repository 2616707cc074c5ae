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

#ifndef CHRONOCYCLE_TWO_PHOTON_WIGNER_HPP
#define CHRONOCYCLE_TWO_PHOTON_WIGNER_HPP

#include "chronocycle/jsa.hpp"
#include "chronocycle/wigner.hpp"

namespace chronocycle {

// Four-variable Wigner distribution of the biphoton state,
//
//   W4(ws, wi, ts, ti) = (1/pi^2) II dv dv' e^{2i v ts} e^{2i v' ti}
//                         J(ws - v, wi - v') J*(ws + v, wi + v'),
//
// evaluated on coarse grids only (it is a 4-D object). Slices fix two of the
// four variables; the omega_minus reduction treats the collective variable of
// the degenerate source as a single mode and returns its ordinary chronocyclic
// Wigner map.

enum class TwoPhotonSliceKind { omega_omega, time_time };

struct TwoPhotonSliceSpec {
    TwoPhotonSliceKind kind = TwoPhotonSliceKind::time_time;
    // omega_omega: fixed times (t_s, t_i); output over the JSA frequency grids.
    double fixed_t_s = 0.0;
    double fixed_t_i = 0.0;
    // time_time: fixed frequencies (w_s, w_i) on grid/half-grid; output axes:
    TimeGrid t_s_axis;
    TimeGrid t_i_axis;
    double fixed_omega_s = 0.0;
    double fixed_omega_i = 0.0;
};

struct TwoPhotonWignerSlice {
    TwoPhotonSliceKind kind;
    std::vector<double> axis_a;  // omega_s values or t_s values
    std::vector<double> axis_b;  // omega_i values or t_i values
    Array2D<double> values;
};

/// Point evaluation; both frequencies must sit on the grid or half-grid.
double two_photon_wigner_at(const JointSpectralAmplitude& j, double omega_s, double omega_i,
                            double t_s, double t_i);

/// 2-D slice of W4. Throws BudgetExceeded when the implied work passes 2^26
/// sample operations.
TwoPhotonWignerSlice two_photon_wigner_slices(const JointSpectralAmplitude& j,
                                              const TwoPhotonSliceSpec& spec);

/// Collective-mode Wigner of the degenerate source: the chronocyclic Wigner
/// of the one-dimensional ridge amplitude expressed in the omega_minus
/// variable x = nu/2.
WignerGrid omega_minus_wigner(const DegenerateJsa& j, const TimeGrid& t_axis);

}  // namespace chronocycle

#endif
