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

#ifndef CHRONOCYCLE_FFT_HPP
#define CHRONOCYCLE_FFT_HPP

#include <complex>
#include <vector>

#include "chronocycle/grid.hpp"

namespace chronocycle {

// Thin wrapper around FFTW complex-to-complex transforms. Planning is guarded
// by a mutex (FFTW's planner is not thread-safe); execution is re-entrant.

/// X_k = sum_j x_j exp(-2*pi*i*j*k/N). Unnormalized.
void dft_forward(std::vector<complexd>& data);

/// x_j = sum_k X_k exp(+2*pi*i*j*k/N). Unnormalized (forward+backward = N*id).
void dft_backward(std::vector<complexd>& data);

/// In-place row transforms of a row-major 2-D array (sign -1: forward).
void dft_rows(Array2D<complexd>& a, int sign);

/// In-place column transforms.
void dft_cols(Array2D<complexd>& a, int sign);

}  // namespace chronocycle

#endif
