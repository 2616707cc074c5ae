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

#ifndef CHRONOCYCLE_GKP_HPP
#define CHRONOCYCLE_GKP_HPP

#include <utility>
#include <vector>

#include "chronocycle/comb.hpp"
#include "chronocycle/spectrum.hpp"

namespace chronocycle {

// Time-frequency grid-code states on the comb lattice. Logical 0/1 occupy the
// even/odd teeth (spacing 2*fsr per logical state); |+>/|-> occupy every tooth
// with equal/alternating weights. In the frequency basis the lattice constant
// is fsr; in the time basis it is tau_rt/2 = pi/fsr.

enum class LogicalLabel { zero, one, plus, minus };
enum class GkpBasis { frequency, time };

/// Ideal grid state: a finite list of delta peaks. Positions are kept as
/// integer lattice indices so that orthogonality and stabilizer eigenvalues
/// come out exact, free of sample-grid artifacts.
struct IdealGkpState {
    LogicalLabel label = LogicalLabel::zero;
    GkpBasis basis = GkpBasis::frequency;
    CombParams comb;
    int truncation = 0;  // d

    /// Peak at lattice_index * lattice_constant() + offset(); weight real.
    struct Peak {
        long long lattice_index;
        double weight;
    };
    std::vector<Peak> peaks;

    /// fsr in the frequency basis, tau_rt/2 in the time basis.
    double lattice_constant() const;
    /// omega_p/2 in the frequency basis, 0 in the time basis.
    double offset() const;
    double peak_position(const Peak& p) const {
        return offset() + p.lattice_index * lattice_constant();
    }
};

/// Physical (noisy) grid state: Gaussian teeth of width comb.tooth_width under
/// the Gaussian envelope exp(-w^2 kappa^2 / 2) produced by time noise kappa.
struct PhysicalGkpState {
    SampledSpectrum spectrum;
    double kappa = 0.0;
    CombParams comb;
    LogicalLabel label = LogicalLabel::zero;
};

/// Eqs-of-definition construction of the truncated ideal state, n in [-d, d].
/// Throws BadPumpCenter if the pump is off the comb lattice.
IdealGkpState ideal_gkp(LogicalLabel label, GkpBasis basis, const CombParams& comb, int d);

/// Exact peak-list inner product <a|b>.
double ideal_overlap(const IdealGkpState& a, const IdealGkpState& b);

/// Sampled spectrum of the noisy state. Grid spacing is chosen to divide both
/// the tooth width (>= points_per_tooth samples per std) and fsr/2 exactly, so
/// lattice points are grid points. Throws GridTooCoarse for unusable inputs.
PhysicalGkpState physical_gkp(LogicalLabel label, const CombParams& comb, double kappa,
                              int points_per_tooth = 8);

/// Envelope-limited kappa giving the requested number of bright teeth
/// (intensity above e^-2 of the central tooth) across the comb.
double kappa_for_tooth_count(const CombParams& comb, double tooth_count);

/// Number of lattice teeth whose peak intensity exceeds e^-2 of the maximum.
int count_bright_teeth(const PhysicalGkpState& state);

/// Z gate by time displacement tau = -tau_rt/2: even teeth keep their sign,
/// odd teeth flip.
PhysicalGkpState z_gate(const PhysicalGkpState& state);

enum class StabilizerKind { frequency_stab, time_stab };

/// <psi| D(2 fsr) |psi> or <psi| T(pi/fsr) |psi>. Exact (+-1 or a rational
/// partial sum) for ideal states; quadrature for physical states.
complexd stabilizer_expectation(const IdealGkpState& state, StabilizerKind which);
complexd stabilizer_expectation(const PhysicalGkpState& state, StabilizerKind which);

/// Nearest-lattice-point logical readout: bins of one lattice constant around
/// even/odd lattice points; exact midpoints go to the even (logical 0) bin.
std::pair<double, double> logical_readout(const IdealGkpState& state, GkpBasis basis);
std::pair<double, double> logical_readout(const PhysicalGkpState& state, GkpBasis basis);

}  // namespace chronocycle

#endif
