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

#include "chronocycle/cavity.hpp"

#include <cmath>

namespace chronocycle {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}  // namespace

complexd cavity_function(const CavityModel& model, double omega) {
    model.validate();
    if (model.kind == CavityKind::gaussian_comb) {
        const double wbar = model.comb.fsr;
        const double dw = model.comb.tooth_width;
        const double f = omega / wbar;
        const long long n0 = std::llround(f);
        const long long reach = 1 + static_cast<long long>(std::ceil(8.0 * dw / wbar));
        double acc = 0.0;
        for (long long n = n0 - reach; n <= n0 + reach; ++n) {
            const double x = (omega - n * wbar) / dw;
            acc += std::exp(-0.5 * x * x);
        }
        return complexd(acc, 0.0);
    }
    const double r = model.reflectivity;
    const double r2 = r * r;
    const double fsr_pol = model.comb.fsr + model.fsr_shift;
    const double phi = kPi * omega / fsr_pol + model.dispersion * omega * omega;
    const complexd num = (1.0 - r2) * std::polar(1.0, phi);
    const complexd den = 1.0 - r2 * std::polar(1.0, 2.0 * phi);
    return num / den;
}

CavityModel signal_cavity(const CavityModel& model) {
    CavityModel out = model;
    out.fsr_shift = model.fsr_shift + 0.5 * model.biref_fsr_offset;
    out.biref_fsr_offset = 0.0;
    return out;
}

CavityModel idler_cavity(const CavityModel& model) {
    CavityModel out = model;
    out.fsr_shift = model.fsr_shift - 0.5 * model.biref_fsr_offset;
    out.biref_fsr_offset = 0.0;
    return out;
}

double airy_fwhm_analytic(double fsr, double r) {
    const double R = r * r;
    return fsr * (1.0 - R) / (kPi * std::sqrt(R));
}

double airy_fwhm_numeric(double fsr, double r) {
    // Bisection on |A|^2 = 1/2 on the upper flank of the central tooth.
    CavityModel m;
    m.kind = CavityKind::fabry_perot;
    m.comb.fsr = fsr;
    m.comb.tooth_width = fsr;  // unused by the Airy branch
    m.reflectivity = r;
    auto intensity = [&](double w) { return std::norm(cavity_function(m, w)); };
    double lo = 0.0, hi = 0.5 * fsr;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (intensity(mid) > 0.5)
            lo = mid;
        else
            hi = mid;
    }
    return lo + hi;  // full width = 2 * half-width
}

double equivalent_gaussian_tooth_width(double fsr, double r) {
    // Matches the integrated intensity over one free spectral range:
    // Int |A|^2 = sigma * sqrt(pi) for a unit-peak gaussian tooth of std
    // sigma. Intensity matching keeps the surrogate tied to the tooth core
    // (the amplitude flanks of the Airy profile carry a log-heavy area).
    CavityModel m;
    m.kind = CavityKind::fabry_perot;
    m.comb.fsr = fsr;
    m.comb.tooth_width = fsr;
    m.reflectivity = r;
    const int n = 4096;
    const double dx = fsr / n;
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = -0.5 * fsr + (i + 0.5) * dx;
        area += std::norm(cavity_function(m, w)) * dx;
    }
    return area / std::sqrt(kPi);
}

}  // namespace chronocycle
