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
#include "eqc/effective_state.hpp"

#include <cmath>
#include <numbers>

namespace eqc {

namespace {

void check_index(const RegisterConfig &config, std::size_t j) {
    if (j >= config.dimension()) {
        throw ConfigError("index " + std::to_string(j) + " out of range for dimension " +
                          std::to_string(config.dimension()));
    }
}

// x - round(x), exact for doubles.
double principal(double x) { return x - std::nearbyint(x); }

} // namespace

AmplitudeVector prepare_final_state(const RegisterConfig &config, PhaseFraction theta) {
    const std::size_t dim = config.dimension();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> entries(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const double turns = principal(static_cast<double>(j) * theta.value());
        entries[j] = std::polar(scale, kTwoPi * turns);
    }
    return {std::move(entries), Basis::Tilde};
}

Complex amplitude_cj(const RegisterConfig &config, PhaseFraction theta, std::size_t j) {
    check_index(config, j);
    const double dim = static_cast<double>(config.dimension());
    // offset = N theta - j is exact: N is a power of two and |offset| < N.
    const double offset = dim * theta.value() - static_cast<double>(j);
    const double s = principal(offset / dim); // z = e^{2 pi i s}
    const double r = principal(offset);       // z^N = e^{2 pi i r}

    const double pi = std::numbers::pi;
    if (s == 0.0) {
        return {1.0, 0.0};
    }
    const double numerator = std::sin(pi * r);
    if (numerator == 0.0) {
        return {0.0, 0.0};
    }
    // e^{i a} - 1 = 2i sin(a/2) e^{i a/2}, applied to numerator and denominator;
    // no cancellation as z -> 1, so only z == 1 itself needs the limit.
    const double magnitude = numerator / (dim * std::sin(pi * s));
    return std::polar(1.0, pi * (r - s)) * magnitude;
}

std::vector<Complex> amplitudes(const RegisterConfig &config, PhaseFraction theta) {
    std::vector<Complex> out(config.dimension());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = amplitude_cj(config, theta, j);
    }
    return out;
}

AmplitudeVector fourier_basis_state(const RegisterConfig &config, std::size_t j) {
    check_index(config, j);
    const std::size_t dim = config.dimension();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> entries(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t slot = (k * j) & (dim - 1);
        entries[k] = std::polar(scale, kTwoPi * static_cast<double>(slot) / static_cast<double>(dim));
    }
    return {std::move(entries), Basis::Fourier};
}

} // namespace eqc
