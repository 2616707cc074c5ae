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

#ifndef CHRONOCYCLE_GRID_HPP
#define CHRONOCYCLE_GRID_HPP

#include <complex>
#include <vector>

#include "chronocycle/errors.hpp"

namespace chronocycle {

using complexd = std::complex<double>;

/// Unit bookkeeping. In SI mode frequencies are rad/s and times are seconds;
/// in normalized mode the comb FSR is 2*pi so the round-trip time is 1.
enum class UnitMode { si, normalized };

/// Uniform angular-frequency axis, endpoints inclusive.
struct FrequencyGrid {
    double omega_min = 0.0;
    double omega_max = 0.0;
    int n_points = 0;
    UnitMode unit_mode = UnitMode::si;

    double spacing() const { return (omega_max - omega_min) / (n_points - 1); }
    double omega(int i) const { return omega_min + spacing() * i; }

    void validate() const {
        if (n_points < 2)
            throw SimError(ErrorCode::InvalidArgument, "frequency grid needs n_points >= 2");
        if (!(omega_max > omega_min))
            throw SimError(ErrorCode::InvalidArgument, "frequency grid needs omega_max > omega_min");
    }

    bool operator==(const FrequencyGrid& o) const {
        return omega_min == o.omega_min && omega_max == o.omega_max && n_points == o.n_points &&
               unit_mode == o.unit_mode;
    }
};

/// Uniform time axis, endpoints inclusive.
struct TimeGrid {
    double t_min = 0.0;
    double t_max = 0.0;
    int n_points = 0;

    double spacing() const { return (t_max - t_min) / (n_points - 1); }
    double t(int i) const { return t_min + spacing() * i; }

    void validate() const {
        if (n_points < 2) throw SimError(ErrorCode::InvalidArgument, "time grid needs n_points >= 2");
        if (!(t_max > t_min))
            throw SimError(ErrorCode::InvalidArgument, "time grid needs t_max > t_min");
    }
};

/// Symmetric grid centered on zero with an even point count, so that 0 itself
/// is a sample and index N/2 sits at the origin.
inline FrequencyGrid make_centered_grid(double half_span, int n_points,
                                        UnitMode mode = UnitMode::si) {
    FrequencyGrid g;
    g.n_points = n_points;
    double delta = 2.0 * half_span / n_points;
    g.omega_min = -half_span;
    g.omega_max = half_span - delta;
    g.unit_mode = mode;
    g.validate();
    return g;
}

/// Trapezoidal quadrature weights (spacing absorbed).
inline std::vector<double> trapezoid_weights(int n, double spacing) {
    std::vector<double> w(n, spacing);
    w.front() = 0.5 * spacing;
    w.back() = 0.5 * spacing;
    return w;
}

/// Dense row-major 2-D array.
template <class T>
struct Array2D {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Array2D() = default;
    Array2D(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    T& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return data.size(); }
};

}  // namespace chronocycle

#endif
