// Copyright 2026 The eqc-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Experiment harness behind the command-line tool. Each run_* function is
 * deterministic for a fixed configuration and seed; rendering to CSV/JSON
 * lives in report.hpp.
 */
#pragma once

#include "eqc/baseline.hpp"
#include "eqc/estimation.hpp"
#include "eqc/random.hpp"
#include "eqc/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqc::experiment {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::size_t kDefaultTrials = 1000;

/// Parses "linspace:start:stop:count" (inclusive endpoints), "list:v1,v2,..."
/// or a bare number. Throws ConfigError.
[[nodiscard]] std::vector<double> parse_theta_grid(std::string_view spec);

struct NRange {
    unsigned lo;
    unsigned hi;
};

/// "A:B" inclusive, or a single value.
[[nodiscard]] NRange parse_n_range(std::string_view spec);

/// Comma-separated positive integers.
[[nodiscard]] std::vector<std::uint64_t> parse_uint_list(std::string_view spec);

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares fit of log(y) against log(x); needs two or more positive points.
[[nodiscard]] LogLogFit fit_log_log(std::span<const double> x, std::span<const double> y);

// distribution -------------------------------------------------------------

struct DistributionRow {
    unsigned n;
    double theta;
    std::size_t j;
    Complex amplitude;
    double probability;
};

[[nodiscard]] std::vector<DistributionRow> run_distribution(unsigned n, std::span<const double> thetas);

// estimate -----------------------------------------------------------------

struct EstimateConfig {
    unsigned n = 3;
    std::optional<double> theta;
    std::optional<ClockScenario> scenario; ///< used when theta is absent
    double energy_gap = 1.0;
    ToleranceSpec tolerance = ToleranceSpec::from_gamma(6);
    std::uint64_t seed = 0;
};

struct EstimateResult {
    PhaseFraction theta_true;
    bool scenario_aliased = false;
    double outcome_probability = 0.0;
    EstimationReport report;
    bool interval_contains_truth = false;
};

/// prepare -> inverse QFT -> one seeded measurement -> report.
[[nodiscard]] EstimateResult run_estimate(const EstimateConfig &config);

// certify-bounds -------------------------------------------------------------

struct CertifyConfig {
    NRange n_range{2, 8};
    std::vector<double> thetas;
    TailMode mode = TailMode::Wrapped;
    bool avoid_exact = false; ///< nudge grid points by +1e-12
};

struct CertifyRow {
    unsigned n;
    std::int64_t gamma;
    double tail_bound;
    double max_tail_exact;
    double max_tail_ratio;
    double min_coverage;
    double max_amplitude_ratio; ///< per n, over all Theta and j with d >= 1
    std::size_t amplitude_violations;
    std::size_t tail_violations;
};

struct CertifyResult {
    std::vector<CertifyRow> rows;
    double max_amplitude_ratio = 0.0;
    double max_tail_ratio = 0.0;
    std::size_t amplitude_checks = 0;
    std::size_t tail_checks = 0;
    std::size_t amplitude_violations = 0;
    std::size_t tail_violations = 0;

    [[nodiscard]] bool passed() const noexcept { return amplitude_violations == 0 && tail_violations == 0; }
};

[[nodiscard]] CertifyResult run_certify_bounds(const CertifyConfig &config);

// scaling ------------------------------------------------------------------

struct ScalingConfig {
    NRange n_range{5, 10};
    double theta = 0.3;
    std::int64_t gamma = 6;
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = 0;
    bool with_baseline = false; ///< baseline at matched clock count K = N - 1
};

struct ScalingRecord {
    unsigned n;
    std::size_t dimension;
    std::size_t clock_count;
    std::int64_t gamma;
    double confidence;
    double delta_theta; ///< gamma / N
    double exact_coverage;
    double empirical_coverage;
    double empirical_rmse;
    double exact_rmse;
    std::optional<double> baseline_rmse;
};

struct ScalingResult {
    std::vector<ScalingRecord> records;
    LogLogFit delta_theta_fit;
    LogLogFit rmse_fit;
    std::optional<LogLogFit> baseline_fit;
};

[[nodiscard]] ScalingResult run_scaling(const ScalingConfig &config);

// baseline -----------------------------------------------------------------

struct BaselineConfig {
    double theta = 0.2;
    std::vector<std::uint64_t> repetitions{100, 1000, 10000, 100000};
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = 0;
};

struct BaselineRecord {
    std::uint64_t repetitions;
    std::uint64_t clock_count;
    double mean_theta_hat;
    double rmse;
    double mean_std_error; ///< over trials with a finite error
    double finite_fraction;
};

struct BaselineSweepResult {
    std::vector<BaselineRecord> records;
    LogLogFit rmse_fit;
};

/// RMSE of baseline_estimate over `trials` seeded runs at K repetitions.
[[nodiscard]] BaselineRecord baseline_point(PhaseFraction theta, std::uint64_t repetitions, std::size_t trials,
                                            std::uint64_t seed);

[[nodiscard]] BaselineSweepResult run_baseline_sweep(const BaselineConfig &config);

// oracle-check ---------------------------------------------------------------

inline constexpr double kOracleTolerance = 1e-12;

struct OracleConfig {
    NRange n_range{1, 3};
    std::size_t scenarios = 100;
    std::uint64_t seed = 0;
};

struct OracleRow {
    unsigned n;
    std::size_t scenarios;
    double max_deviation;
    double max_leakage;
    double max_norm_drift;
    double max_shift_deviation; ///< (t_A, t_B) vs (t_A + s, t_B + s)
    double seconds; ///< wall time, not part of rendered output
    bool passed;
};

struct OracleResult {
    std::vector<OracleRow> rows;
    [[nodiscard]] bool passed() const noexcept;
};

[[nodiscard]] OracleResult run_oracle_check(const OracleConfig &config);

} // namespace eqc::experiment
