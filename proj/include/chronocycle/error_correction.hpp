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

#ifndef CHRONOCYCLE_ERROR_CORRECTION_HPP
#define CHRONOCYCLE_ERROR_CORRECTION_HPP

#include <cstdint>
#include <utility>

#include "chronocycle/comb.hpp"

namespace chronocycle {

// Measurement-based correction of time noise on the entangled two-photon grid
// state. Protocol per trial, with T = 2*pi/fsr the comb time period:
//
//   1. Pre-gate time noises t (signal, std sigma_s) and t' (idler, std
//      sigma_i); frequency noises omega, omega' (std freq_width) ride along
//      as phases and do not enter the time decoder.
//   2. The entangling gate couples the noises; the ancilla (idler) click
//      reveals u = t - t' modulo the comb lattice: tau = k*T + (t - t').
//   3. Decoding on the T/2 lattice (the ancilla's logical lattice), ties to
//      the lower index. Success <=> decoded index equals 2k*, which is
//      exactly |t - t'| < T/4 = pi/(2*fsr), boundary excluded.
//   4. The data shift (t + t')/2 is corrected by its conditional mean given
//      the revealed offset; the success-conditioned residual is N(0, delta^2)
//      with delta^2 = sigma_s^2 sigma_i^2 / (sigma_s^2 + sigma_i^2).
//
// The Dirac model runs the same bookkeeping on fixed offsets: no Bayes step,
// so the residual equals (t + t')/2 exactly.

enum class NoiseKind { dirac, gaussian };

struct NoiseModel {
    NoiseKind kind = NoiseKind::gaussian;
    // Gaussian widths: time-domain standard deviations (seconds in SI mode).
    double time_width_signal = 0.0;
    double time_width_idler = 0.0;
    double freq_width = 0.0;  // both photons
    // Dirac offsets used instead of widths:
    double dirac_t = 0.0;
    double dirac_t_prime = 0.0;
    double dirac_omega = 0.0;
    double dirac_omega_prime = 0.0;
};

struct Posterior {
    double mean = 0.0;     // t_m
    double std_dev = 0.0;  // delta
    long long peak_index = 0;
    double click_time = 0.0;
};

struct EcTrialRecord {
    double t = 0.0, t_prime = 0.0, omega = 0.0, omega_prime = 0.0;
    double click_time = 0.0;
    long long true_index = 0;     // 2 k* on the T/2 decision lattice
    long long decoded_index = 0;  // nearest T/2 lattice index of the click
    bool success = false;
    Posterior posterior;
    double correction = 0.0;
    double residual_error = 0.0;
};

/// The entangling map on arrival times: (ts, ti) -> (ts + ti, ts - ti).
std::pair<double, double> c_prime_on_times(double ts, double ti);

/// Posterior of the signal's time noise after an ancilla click at tau decoded
/// to peak m:  t_m = (tau + m T) sigma_s^2 / (sigma_s^2 + sigma_i^2),
/// delta^2 = sigma_s^2 sigma_i^2 / (sigma_s^2 + sigma_i^2).
/// Throws ModelMismatch for a Dirac model.
Posterior posterior_after_click(const NoiseModel& noise, const CombParams& comb, double tau,
                                long long m);

/// One seeded protocol round. All randomness derives from `seed`.
EcTrialRecord run_trial(const CombParams& comb, const NoiseModel& noise, std::uint64_t seed);

struct EcStatistics {
    long long n_trials = 0;
    long long successes = 0;
    double success_rate = 0.0;
    double residual_mean = 0.0;
    double residual_variance = 0.0;
    double success_residual_mean = 0.0;
    double success_residual_variance = 0.0;
    double delta_squared = 0.0;           // posterior theory value
    double posterior_consistency = 0.0;   // success variance / delta^2 - 1
};

/// Deterministic Monte Carlo: per-trial counter-derived seeds, reduction in
/// trial order, so results are bitwise identical for any thread count.
EcStatistics ec_monte_carlo(const CombParams& comb, const NoiseModel& noise, long long n_trials,
                            std::uint64_t master_seed, int n_threads = 1);

/// Counter-based stream split (SplitMix64 over master ^ index).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace chronocycle

#endif
