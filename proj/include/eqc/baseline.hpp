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
 * The original two-clock protocol: K independent |psi+> pairs, each
 * measured in the {|psi+>, |psi->} basis, with frequency inversion of the
 * |psi+> count back to a phase estimate.
 */
#pragma once

#include "eqc/types.hpp"

#include <cstdint>

namespace eqc {

struct BaselineRun {
    std::uint64_t repetitions = 0; ///< K pairs, i.e. 2K clocks
    std::uint64_t plus_count = 0;
    PhaseFraction theta_true;

    [[nodiscard]] std::uint64_t clock_count() const noexcept { return 2 * repetitions; }
};

struct BaselineEstimate {
    double theta_hat = 0.0;
    /// Delta-method standard error; infinite where dp/dtheta vanishes.
    double std_error = 0.0;
};

/// |<psi+|psi_f>|^2 = cos^2(pi theta).
[[nodiscard]] double psi_plus_probability(PhaseFraction theta);

/// plus_count ~ Binomial(K, cos^2(pi theta)), drawn as K seeded Bernoulli trials.
[[nodiscard]] BaselineRun run_baseline(PhaseFraction theta, std::uint64_t repetitions, std::uint64_t seed);

/// arccos(sqrt(p_hat))/pi, clamped to [0, 1/2]. Only meaningful for theta in
/// [0, 1/2], where cos^2(pi theta) is one-to-one.
[[nodiscard]] BaselineEstimate baseline_estimate(const BaselineRun &run);

} // namespace eqc
