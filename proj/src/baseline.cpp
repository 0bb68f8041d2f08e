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
#include "eqc/baseline.hpp"

#include "eqc/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace eqc {

double psi_plus_probability(PhaseFraction theta) {
    const double c = std::cos(std::numbers::pi * theta.value());
    return std::clamp(c * c, 0.0, 1.0);
}

BaselineRun run_baseline(PhaseFraction theta, std::uint64_t repetitions, std::uint64_t seed) {
    if (repetitions == 0) {
        throw ConfigError("baseline needs at least one repetition");
    }
    const double p = psi_plus_probability(theta);
    Rng rng(seed);
    std::uint64_t plus = 0;
    for (std::uint64_t i = 0; i < repetitions; ++i) {
        if (rng.uniform() < p) {
            ++plus;
        }
    }
    return {repetitions, plus, theta};
}

BaselineEstimate baseline_estimate(const BaselineRun &run) {
    if (run.repetitions == 0 || run.plus_count > run.repetitions) {
        throw ConfigError("inconsistent baseline run");
    }
    const double k = static_cast<double>(run.repetitions);
    const double p_hat = static_cast<double>(run.plus_count) / k;
    const double theta_hat = std::clamp(std::acos(std::sqrt(p_hat)) / std::numbers::pi, 0.0, 0.5);

    const double slope = std::numbers::pi * std::sin(kTwoPi * theta_hat);
    double std_error = std::numeric_limits<double>::infinity();
    if (run.plus_count != 0 && run.plus_count != run.repetitions && slope != 0.0) {
        std_error = std::sqrt(p_hat * (1.0 - p_hat) / k) / std::abs(slope);
    }
    return {theta_hat, std_error};
}

} // namespace eqc
