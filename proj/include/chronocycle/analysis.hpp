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

#ifndef CHRONOCYCLE_ANALYSIS_HPP
#define CHRONOCYCLE_ANALYSIS_HPP

#include <vector>

namespace chronocycle {

/// Fundamental period of a sampled non-negative profile via its
/// autocorrelation: first interior local maximum past the zero-lag peak,
/// parabolic-refined. Returns 0 when no secondary peak exists.
double estimate_period(const std::vector<double>& y, double dx);

/// Periodic-modulation strength near the expected period: the height of the
/// autocorrelation's local maximum in [0.7, 1.3] periods over the local
/// baseline, normalized by c(0). Zero when no local maximum exists there.
double autocorrelation_contrast(const std::vector<double>& y, double dx,
                                double expected_period);

}  // namespace chronocycle

#endif
