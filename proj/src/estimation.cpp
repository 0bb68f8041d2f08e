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
#include "eqc/estimation.hpp"

#include "eqc/effective_state.hpp"
#include "eqc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqc {

namespace {

void check_gamma_range(const RegisterConfig &config, std::int64_t gamma) {
    const auto half = static_cast<std::int64_t>(config.dimension() / 2);
    if (gamma < 1 || gamma > half) {
        throw ConfigError("gamma = " + std::to_string(gamma) + " outside [1, N/2] = [1, " +
                          std::to_string(half) + "]");
    }
}

} // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities, RegisterConfig config,
                                         PhaseFraction theta_true)
    : probabilities_(std::move(probabilities)), config_(config), theta_true_(theta_true) {
    if (probabilities_.size() != config_.dimension()) {
        throw ConfigError("distribution length does not match register dimension");
    }
    if (std::any_of(probabilities_.begin(), probabilities_.end(), [](double p) { return !(p >= 0.0); })) {
        throw ConfigError("probabilities must be non-negative");
    }
    const double total = std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
    if (std::abs(total - 1.0) > kDistributionTolerance) {
        throw ConfigError("probabilities sum to " + std::to_string(total));
    }
}

ToleranceSpec ToleranceSpec::from_gamma(std::int64_t gamma) {
    return {gamma, 1.0 - tail_probability_bound(gamma)};
}

ToleranceSpec ToleranceSpec::from_confidence(double confidence) {
    return from_gamma(gamma_for_confidence(confidence));
}

bool EstimationReport::interval_contains(PhaseFraction theta) const {
    // Shift theta by whole turns to the copy nearest the interval centre.
    const double centre = 0.5 * (theta_lo + theta_hi);
    const double shifted = theta.value() + std::nearbyint(centre - theta.value());
    return theta_lo <= shifted && shifted <= theta_hi;
}

double wrapped_distance(const RegisterConfig &config, PhaseFraction theta, std::size_t j) {
    const double dim = static_cast<double>(config.dimension());
    const double offset = static_cast<double>(j) - dim * theta.value();
    const double fraction = offset / dim; // j/N - theta
    if (fraction > 0.5) {
        return std::abs(offset - dim);
    }
    if (fraction < -0.5) {
        return std::abs(offset + dim);
    }
    return std::abs(offset);
}

double outcome_distance(const RegisterConfig &config, PhaseFraction theta, std::size_t j, TailMode mode) {
    if (mode == TailMode::Linear) {
        return std::abs(static_cast<double>(j) - static_cast<double>(config.dimension()) * theta.value());
    }
    return wrapped_distance(config, theta, j);
}

double wrapped_error(const RegisterConfig &config, PhaseFraction theta, std::size_t m) {
    const double dim = static_cast<double>(config.dimension());
    const double error = (static_cast<double>(m) - dim * theta.value()) / dim;
    return error - std::floor(error + 0.5);
}

OutcomeDistribution distribution(const RegisterConfig &config, PhaseFraction theta) {
    std::vector<double> probs(config.dimension());
    for (std::size_t j = 0; j < probs.size(); ++j) {
        probs[j] = std::norm(amplitude_cj(config, theta, j));
    }
    return {std::move(probs), config, theta};
}

OutcomeDistribution distribution_from_state(const AmplitudeVector &state, const RegisterConfig &config,
                                            PhaseFraction theta) {
    state.require_dimension(config);
    if (state.basis() != Basis::Computational) {
        throw ConfigError("measurement statistics need a computational-basis state, got " +
                          to_string(state.basis()));
    }
    std::vector<double> probs(state.size());
    std::transform(state.entries().begin(), state.entries().end(), probs.begin(),
                   [](const Complex &c) { return std::norm(c); });
    return {std::move(probs), config, theta};
}

std::vector<std::size_t> sample(const OutcomeDistribution &dist, std::uint64_t seed, std::size_t count) {
    if (count == 0) {
        throw ConfigError("sample count must be at least 1");
    }
    const auto probs = dist.probabilities();
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    const double total = cdf.back();
    // Last outcome with positive mass absorbs u beyond the rounded total.
    std::size_t last = probs.size() - 1;
    while (last > 0 && probs[last] == 0.0) {
        --last;
    }

    Rng rng(seed);
    std::vector<std::size_t> draws(count);
    for (auto &draw : draws) {
        const double u = rng.uniform() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        draw = std::min(static_cast<std::size_t>(it - cdf.begin()), last);
    }
    return draws;
}

EstimationReport estimate(std::size_t outcome_m, const RegisterConfig &config, double energy_gap,
                          const ToleranceSpec &spec) {
    if (outcome_m >= config.dimension()) {
        throw ConfigError("outcome " + std::to_string(outcome_m) + " out of range");
    }
    if (!(energy_gap > 0.0) || !std::isfinite(energy_gap)) {
        throw ConfigError("energy gap must be positive and finite");
    }
    const double dim = static_cast<double>(config.dimension());
    const double m = static_cast<double>(outcome_m);
    const double half_width = static_cast<double>(spec.gamma()) / dim;

    EstimationReport report;
    report.outcome_m = outcome_m;
    report.theta_hat = PhaseFraction(m / dim);
    report.delta_t_hat = kTwoPi * m / (dim * energy_gap);
    report.gamma = spec.gamma();
    report.confidence = spec.confidence();
    report.theta_lo = m / dim - half_width;
    report.theta_hi = m / dim + half_width;
    report.delta_t_period = kTwoPi / energy_gap;
    report.aliasing_note = true;
    return report;
}

double amplitude_bound(const RegisterConfig &config, PhaseFraction theta, std::size_t j) {
    if (j >= config.dimension()) {
        throw ConfigError("index " + std::to_string(j) + " out of range");
    }
    const double d = wrapped_distance(config, theta, j);
    if (d == 0.0) {
        return kInfiniteBound;
    }
    return 1.0 / (2.0 * d);
}

double tail_probability_exact(const OutcomeDistribution &dist, std::int64_t gamma, TailMode mode) {
    const auto &config = dist.config();
    check_gamma_range(config, gamma);
    const auto probs = dist.probabilities();
    const double limit = static_cast<double>(gamma);
    double tail = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        if (outcome_distance(config, dist.theta_true(), j, mode) > limit) {
            tail += probs[j];
        }
    }
    return std::clamp(tail, 0.0, 1.0);
}

double tail_probability_exact(const RegisterConfig &config, PhaseFraction theta, std::int64_t gamma,
                              TailMode mode) {
    check_gamma_range(config, gamma);
    return tail_probability_exact(distribution(config, theta), gamma, mode);
}

std::vector<double> tail_profile(const OutcomeDistribution &dist, TailMode mode) {
    const auto &config = dist.config();
    const auto probs = dist.probabilities();
    const std::size_t half = config.dimension() / 2;
    // d > gamma  <=>  gamma <= ceil(d) - 1 for integer gamma.
    std::vector<double> mass(probs.size() + 1, 0.0);
    for (std::size_t j = 0; j < probs.size(); ++j) {
        const double d = outcome_distance(config, dist.theta_true(), j, mode);
        const auto reach = static_cast<std::size_t>(std::max(0.0, std::ceil(d) - 1.0));
        mass[std::min(reach, probs.size())] += probs[j];
    }
    std::vector<double> tail(half + 1, 0.0);
    double suffix = 0.0;
    for (std::size_t g = mass.size(); g-- > 1;) {
        suffix += mass[g];
        if (g <= half) {
            tail[g] = std::clamp(suffix, 0.0, 1.0);
        }
    }
    return tail;
}

double tail_probability_bound(std::int64_t gamma) {
    if (gamma < 2) {
        throw ConfigError("tail bound needs gamma >= 2");
    }
    return 1.0 / (2.0 * static_cast<double>(gamma - 1));
}

std::int64_t gamma_for_confidence(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw ConfigError("confidence must lie strictly between 0 and 1");
    }
    const double raw = 1.0 + 1.0 / (2.0 * (1.0 - confidence));
    if (raw > 1e15) {
        throw ConfigError("confidence too close to 1");
    }
    // 1 - 0.9 is not exactly 0.1; start just below the real-valued root and
    // step up until the guarantee is met.
    auto gamma = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(raw - 1e-9)));
    while (1.0 - tail_probability_bound(gamma) < confidence) {
        ++gamma;
    }
    return gamma;
}

double exact_rmse(const OutcomeDistribution &dist) {
    const auto probs = dist.probabilities();
    double mse = 0.0;
    for (std::size_t m = 0; m < probs.size(); ++m) {
        const double e = wrapped_error(dist.config(), dist.theta_true(), m);
        mse += probs[m] * e * e;
    }
    return std::sqrt(mse);
}

} // namespace eqc
