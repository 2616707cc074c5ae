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

#include "chronocycle/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "chronocycle/fft.hpp"

namespace chronocycle {

namespace {

/// Linear (zero-padded) autocorrelation c[lag] = sum_i y_i y_{i+lag},
/// lag in [0, max_lag], via the power spectrum.
std::vector<double> autocorrelation(const std::vector<double>& y, size_t max_lag) {
    size_t n = 1;
    while (n < 2 * y.size()) n <<= 1;
    std::vector<complexd> buf(n, complexd(0.0, 0.0));
    for (size_t i = 0; i < y.size(); ++i) buf[i] = y[i];
    dft_forward(buf);
    for (auto& v : buf) v = std::norm(v);
    dft_backward(buf);
    std::vector<double> c(max_lag + 1, 0.0);
    const double scale = 1.0 / static_cast<double>(n);
    for (size_t lag = 0; lag <= max_lag && lag < n; ++lag) c[lag] = buf[lag].real() * scale;
    return c;
}

}  // namespace

double estimate_period(const std::vector<double>& y, double dx) {
    if (y.size() < 8) return 0.0;
    const size_t max_lag = y.size() / 2;
    const auto c = autocorrelation(y, max_lag);
    const double c0 = c[0];
    if (!(c0 > 0.0)) return 0.0;

    // Leave the central peak, then take the tallest secondary feature: for a
    // repetitive profile the first repetition peak dominates every later one,
    // and a global search is immune to round-off ripples on the flat
    // stretches between peaks.
    size_t i = 1;
    while (i < max_lag && c[i] > 0.5 * c0) ++i;
    if (i + 2 >= max_lag) return 0.0;
    size_t best = i + 1;
    for (size_t k = i + 1; k + 1 <= max_lag; ++k)
        if (c[k] > c[best]) best = k;
    if (best + 1 > max_lag || best <= i || c[best] < 1e-6 * c0) return 0.0;

    const double y0 = c[best - 1], y1 = c[best], y2 = c[best + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    double shift = 0.0;
    if (denom < 0.0) shift = 0.5 * (y0 - y2) / denom;
    return (static_cast<double>(best) + shift) * dx;
}

double autocorrelation_contrast(const std::vector<double>& y, double dx, double expected_period) {
    const size_t hi = static_cast<size_t>(std::ceil(1.3 * expected_period / dx));
    if (hi + 1 >= y.size() || hi < 8) return 0.0;
    const auto c = autocorrelation(y, hi + 1);
    if (!(c[0] > 0.0)) return 0.0;

    // A periodic profile shows a local autocorrelation maximum near the
    // period; a smooth profile shows none, which counts as zero contrast.
    const size_t lo = static_cast<size_t>(std::floor(0.7 * expected_period / dx));
    size_t peak = 0;
    for (size_t k = std::max<size_t>(lo, 1); k < hi; ++k) {
        if (c[k] >= c[k - 1] && c[k] > c[k + 1] && (peak == 0 || c[k] > c[peak])) peak = k;
    }
    if (peak == 0) return 0.0;
    const size_t b1 = static_cast<size_t>(std::llround(0.8 * expected_period / dx));
    const size_t b2 = static_cast<size_t>(std::llround(1.2 * expected_period / dx));
    const double base = 0.5 * (c[std::min(b1, hi)] + c[std::min(b2, hi)]);
    return (c[peak] - base) / c[0];
}

}  // namespace chronocycle
