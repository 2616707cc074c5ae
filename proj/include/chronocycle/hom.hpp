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

#ifndef CHRONOCYCLE_HOM_HPP
#define CHRONOCYCLE_HOM_HPP

#include <optional>
#include <vector>

#include "chronocycle/jsa.hpp"

namespace chronocycle {

// Hong-Ou-Mandel coincidence probability against the gate delay tau:
//
//   I(tau) = 1/2 [ 1 - Re Int K(nu) e^{-i nu tau / 2} dnu / N ]
//   K(nu)  = f-(nu/2) f-*(-nu/2) A_s(a) A_i(b) A_s*(b) A_i*(a),
//            a = (wp+nu)/2, b = (wp-nu)/2,    N = Int |g(nu)|^2 dnu.
//
// tau is the displacement parameter of the time-shift gate: replica dips sit
// at integer multiples of tau_rt and tau = -tau_rt/2 realizes the Z gate,
// landing midway between replicas. With a single shared cavity the kernel
// reduces to |f_cav(a) f_cav(b)|^2 f- f-* and N equals the tau = 0 integral.

struct FilterSpec {
    enum class Shape { rect, gaussian };
    double center = 0.0;     // angular frequency
    double bandwidth = 0.0;  // full width (FWHM for the gaussian shape)
    Shape shape = Shape::rect;
};

/// Intensity response in [0, 1].
double filter_intensity_response(const FilterSpec& f, double omega);

struct HomScan {
    std::vector<double> tau;
    std::vector<double> coincidence;
    CombParams params;
};

/// Numerical coincidence scan. A full 2-D JSA is reduced over the sum
/// frequency first (signal and idler grids must coincide for the exchange
/// term to be sampled exactly).
HomScan coincidence_scan(const JsaModel& source, const std::vector<double>& tau_axis,
                         const std::optional<FilterSpec>& filter = std::nullopt);

/// Closed-form high-finesse coincidence probability:
///   I(tau) = 1/2 [1 - e^{-dw^2 tau^2/8} sum alpha_n cos((n fsr - wp/2) tau) / sum alpha_n],
///   alpha_n = exp(-(wp/2 - n fsr)^2 / dw_minus^2),  n in [-d, d].
/// Throws RegimeViolation unless fsr/tooth_width > 10.
double coincidence_analytic(const CombParams& comb, double tau);

/// V = (1/2 - I_min) / (1/2) for the unique dip inside the window.
/// Throws NoDipFound when the window holds no interior local minimum.
double dip_visibility(const HomScan& scan, double center, double window);

struct VisibilityPoint {
    double reflectivity;
    double filter_bandwidth;  // 0 when unfiltered
    double visibility;        // secondary dip (first replica)
    double tau_at_min;
    double coincidence_min;
};

/// Fig.-6-style sweep: for each (r, filter) builds the degenerate
/// Fabry-Perot source from `cavity_template` (dispersion and birefringence
/// kept, reflectivity replaced) and extracts the first-replica visibility.
std::vector<VisibilityPoint> visibility_vs_reflectivity(
    const CombParams& params, const CavityModel& cavity_template,
    const std::vector<double>& r_grid, const std::vector<std::optional<FilterSpec>>& filters,
    int n_threads = 1);

}  // namespace chronocycle

#endif
