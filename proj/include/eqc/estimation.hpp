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
 * Measurement statistics after the inverse QFT, phase estimates, and the
 * analytic amplitude and tail-probability bounds that back the reported
 * confidence intervals.
 */
#pragma once

#include "eqc/types.hpp"

#include <cstdint>
#include <limits>
#include <optional>

namespace eqc {

inline constexpr double kDistributionTolerance = 1e-10;

/// How the error event |m - N theta| > gamma is measured.
enum class TailMode {
    Wrapped, ///< circular distance on the ring of N outcomes
    Linear,  ///< plain |j - N theta|, no wrap-around
};

class OutcomeDistribution {
  public:
    OutcomeDistribution(std::vector<double> probabilities, RegisterConfig config, PhaseFraction theta_true);

    [[nodiscard]] std::span<const double> probabilities() const noexcept { return probabilities_; }
    [[nodiscard]] double operator[](std::size_t j) const { return probabilities_[j]; }
    [[nodiscard]] const RegisterConfig &config() const noexcept { return config_; }
    [[nodiscard]] PhaseFraction theta_true() const noexcept { return theta_true_; }

  private:
    std::vector<double> probabilities_;
    RegisterConfig config_;
    PhaseFraction theta_true_;
};

/// Integer tolerance gamma >= 2 and its guaranteed confidence 1 - 1/(2(gamma-1)).
class ToleranceSpec {
  public:
    static ToleranceSpec from_gamma(std::int64_t gamma);
    /// Smallest gamma whose guarantee meets `confidence`.
    static ToleranceSpec from_confidence(double confidence);

    [[nodiscard]] std::int64_t gamma() const noexcept { return gamma_; }
    [[nodiscard]] double confidence() const noexcept { return confidence_; }

  private:
    ToleranceSpec(std::int64_t gamma, double confidence) : gamma_(gamma), confidence_(confidence) {}

    std::int64_t gamma_;
    double confidence_;
};

struct EstimationReport {
    std::size_t outcome_m = 0;
    PhaseFraction theta_hat;
    double delta_t_hat = 0.0; ///< principal value in [0, 2 pi / E)
    std::int64_t gamma = 0;
    double confidence = 0.0;
    double theta_lo = 0.0; ///< m/N - gamma/N, not wrapped
    double theta_hi = 0.0; ///< m/N + gamma/N, not wrapped
    double delta_t_period = 0.0; ///< dt is recovered modulo 2 pi / E
    bool aliasing_note = true;

    /// Whether theta lies in [theta_lo, theta_hi] modulo 1.
    [[nodiscard]] bool interval_contains(PhaseFraction theta) const;
};

/// Circular distance between outcome j and N theta on the ring of size N.
/// Picks the three-branch shift: no shift when |j/N - theta| <= 1/2,
/// otherwise shift j by -N or +N.
[[nodiscard]] double wrapped_distance(const RegisterConfig &config, PhaseFraction theta, std::size_t j);

[[nodiscard]] double outcome_distance(const RegisterConfig &config, PhaseFraction theta, std::size_t j,
                                      TailMode mode);

/// Signed error m/N - theta reduced to [-1/2, 1/2).
[[nodiscard]] double wrapped_error(const RegisterConfig &config, PhaseFraction theta, std::size_t m);

/// |c_j|^2 for every outcome j (closed form).
[[nodiscard]] OutcomeDistribution distribution(const RegisterConfig &config, PhaseFraction theta);

/// |a_j|^2 of a computational-basis state, e.g. the inverse-QFT output.
[[nodiscard]] OutcomeDistribution distribution_from_state(const AmplitudeVector &state,
                                                          const RegisterConfig &config, PhaseFraction theta);

/// i.i.d. inverse-CDF draws; identical seeds give identical sequences.
[[nodiscard]] std::vector<std::size_t> sample(const OutcomeDistribution &dist, std::uint64_t seed,
                                              std::size_t count);

[[nodiscard]] EstimationReport estimate(std::size_t outcome_m, const RegisterConfig &config, double energy_gap,
                                        const ToleranceSpec &spec);

inline constexpr double kInfiniteBound = std::numeric_limits<double>::infinity();

/// 1/(2 d) with d the wrapped distance; kInfiniteBound when d = 0.
[[nodiscard]] double amplitude_bound(const RegisterConfig &config, PhaseFraction theta, std::size_t j);

/// Exact probability that the outcome lies farther than gamma from N theta.
[[nodiscard]] double tail_probability_exact(const OutcomeDistribution &dist, std::int64_t gamma,
                                            TailMode mode = TailMode::Wrapped);
[[nodiscard]] double tail_probability_exact(const RegisterConfig &config, PhaseFraction theta,
                                            std::int64_t gamma, TailMode mode = TailMode::Wrapped);

/// Tail probability for every gamma in [1, N/2] from one pass; index 0 unused.
[[nodiscard]] std::vector<double> tail_profile(const OutcomeDistribution &dist, TailMode mode = TailMode::Wrapped);

/// 1/(2(gamma - 1)); requires gamma >= 2.
[[nodiscard]] double tail_probability_bound(std::int64_t gamma);

/// ceil(1 + 1/(2(1 - confidence))), at least 2.
[[nodiscard]] std::int64_t gamma_for_confidence(double confidence);

/// sqrt(sum_j p_j e_j^2) with e_j the wrapped error of outcome j.
[[nodiscard]] double exact_rmse(const OutcomeDistribution &dist);

} // namespace eqc
