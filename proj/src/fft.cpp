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

#include "chronocycle/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace chronocycle {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void dft_1d(std::vector<complexd>& data, int sign) {
    const int n = static_cast<int>(data.size());
    if (n == 0) return;
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        // FFTW_ESTIMATE leaves the input untouched during planning.
        plan = fftw_plan_dft_1d(n, p, p, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace

void dft_forward(std::vector<complexd>& data) { dft_1d(data, FFTW_FORWARD); }

void dft_backward(std::vector<complexd>& data) { dft_1d(data, FFTW_BACKWARD); }

void dft_rows(Array2D<complexd>& a, int sign) {
    if (a.rows == 0 || a.cols == 0) return;
    auto* p = reinterpret_cast<fftw_complex*>(a.data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        int n[1] = {a.cols};
        plan = fftw_plan_many_dft(1, n, a.rows, p, nullptr, 1, a.cols, p, nullptr, 1, a.cols,
                                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

void dft_cols(Array2D<complexd>& a, int sign) {
    if (a.rows == 0 || a.cols == 0) return;
    auto* p = reinterpret_cast<fftw_complex*>(a.data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        int n[1] = {a.rows};
        plan = fftw_plan_many_dft(1, n, a.cols, p, nullptr, a.cols, 1, p, nullptr, a.cols, 1,
                                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace chronocycle
