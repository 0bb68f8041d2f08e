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
#include "eqc/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eqc {

PhaseFraction::PhaseFraction(double raw) {
    if (!std::isfinite(raw)) {
        throw ConfigError("phase fraction must be finite");
    }
    double reduced = raw - std::floor(raw);
    // floor() can leave exactly 1.0 for tiny negative inputs.
    if (reduced >= 1.0) {
        reduced = 0.0;
    }
    value_ = reduced;
}

PhaseFraction ClockScenario::phase() const {
    validate();
    return PhaseFraction(energy_gap * delta_t() / kTwoPi);
}

bool ClockScenario::aliased() const {
    const double phase = energy_gap * delta_t();
    return phase < 0.0 || phase >= kTwoPi;
}

void ClockScenario::validate() const {
    if (!(energy_gap > 0.0) || !std::isfinite(energy_gap)) {
        throw ConfigError("energy gap must be positive and finite");
    }
    if (!(proper_time_a >= 0.0) || !(proper_time_b >= 0.0) || !std::isfinite(proper_time_a) ||
        !std::isfinite(proper_time_b)) {
        throw ConfigError("proper times must be finite and non-negative");
    }
}

RegisterConfig::RegisterConfig(unsigned n, unsigned max_qubits) : n_(n) {
    if (n == 0) {
        throw ConfigError("register needs at least one qubit");
    }
    if (n > max_qubits) {
        throw ConfigError("n = " + std::to_string(n) + " exceeds the dense-simulation cap of " +
                          std::to_string(max_qubits));
    }
    if (n >= 8 * sizeof(std::size_t) - 1) {
        throw ConfigError("dimension overflow");
    }
}

std::string to_string(Basis basis) {
    switch (basis) {
    case Basis::Tilde:
        return "tilde";
    case Basis::Computational:
        return "computational";
    case Basis::Fourier:
        return "fourier";
    }
    return "unknown";
}

AmplitudeVector::AmplitudeVector(std::vector<Complex> entries, Basis basis)
    : entries_(std::move(entries)), basis_(basis) {
    if (entries_.empty()) {
        throw ConfigError("amplitude vector must not be empty");
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw ConfigError("amplitude vector is not normalized");
    }
}

double AmplitudeVector::norm_squared() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0.0,
                           [](double acc, const Complex &c) { return acc + std::norm(c); });
}

void AmplitudeVector::require_dimension(const RegisterConfig &config) const {
    if (entries_.size() != config.dimension()) {
        throw ConfigError("state has length " + std::to_string(entries_.size()) +
                          " but the register dimension is " + std::to_string(config.dimension()));
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ConfigError("inner product of vectors with different lengths");
    }
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double max_abs_deviation(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ConfigError("deviation of vectors with different lengths");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace eqc
