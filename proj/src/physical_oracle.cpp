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
#include "eqc/physical_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace eqc {

namespace {

RegisterConfig oracle_config(const RegisterConfig &config) {
    if (config.qubits() > kMaxOracleQubits) {
        throw ConfigError("physical oracle limited to n <= " + std::to_string(kMaxOracleQubits));
    }
    return config;
}

} // namespace

std::vector<QubitSlot> physical_layout(const RegisterConfig &config) {
    std::vector<QubitSlot> layout;
    layout.reserve(config.clock_count());
    for (unsigned k = config.qubits(); k-- > 0;) {
        const unsigned copies = 1U << k;
        for (unsigned c = 0; c < copies; ++c) {
            layout.push_back({k, ClockLabel::A, c});
        }
        for (unsigned c = 0; c < copies; ++c) {
            layout.push_back({k, ClockLabel::B, c});
        }
    }
    return layout;
}

PhysicalState::PhysicalState(RegisterConfig config, std::vector<Complex> entries)
    : config_(oracle_config(config)), layout_(physical_layout(config_)), entries_(std::move(entries)) {
    if (entries_.size() != (std::size_t{1} << layout_.size())) {
        throw ConfigError("physical state length does not match 2^(2(N-1))");
    }
}

double PhysicalState::norm_squared() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0.0,
                           [](double acc, const Complex &c) { return acc + std::norm(c); });
}

std::size_t PhysicalState::tilde_index(std::size_t j) const {
    const std::size_t q = layout_.size();
    std::size_t index = 0;
    for (std::size_t p = 0; p < q; ++p) {
        const auto &slot = layout_[p];
        const bool one_tilde = ((j >> slot.group) & 1U) != 0;
        // |0~> = |0..0>_A |1..1>_B, |1~> = |1..1>_A |0..0>_B
        const bool bit = (slot.label == ClockLabel::A) == one_tilde;
        if (bit) {
            index |= std::size_t{1} << (q - 1 - p);
        }
    }
    return index;
}

std::size_t PhysicalState::mask(ClockLabel label) const {
    const std::size_t q = layout_.size();
    std::size_t m = 0;
    for (std::size_t p = 0; p < q; ++p) {
        if (layout_[p].label == label) {
            m |= std::size_t{1} << (q - 1 - p);
        }
    }
    return m;
}

PhysicalState prepare_physical(const RegisterConfig &config) {
    const auto checked = oracle_config(config);
    const std::size_t physical_dim = std::size_t{1} << checked.clock_count();
    PhysicalState blank(checked, std::vector<Complex>(physical_dim));

    std::vector<Complex> entries(physical_dim);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(checked.dimension()));
    for (std::size_t j = 0; j < checked.dimension(); ++j) {
        entries[blank.tilde_index(j)] = amplitude;
    }
    return {checked, std::move(entries)};
}

PhysicalState evolve_physical(const PhysicalState &state, const ClockScenario &scenario) {
    scenario.validate();
    const std::size_t mask_a = state.mask(ClockLabel::A);
    const std::size_t mask_b = state.mask(ClockLabel::B);
    const auto in = state.entries();
    std::vector<Complex> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i] == Complex{}) {
            continue;
        }
        const double excited_a = std::popcount(i & mask_a);
        const double excited_b = std::popcount(i & mask_b);
        const double phase =
            -scenario.energy_gap * (excited_a * scenario.proper_time_a + excited_b * scenario.proper_time_b);
        out[i] = in[i] * std::polar(1.0, phase);
    }
    return {state.config(), std::move(out)};
}

TildeProjection project_to_tilde(const PhysicalState &state, const RegisterConfig &config) {
    if (!(state.config() == config)) {
        throw ConfigError("physical state was prepared for a different register");
    }
    const auto entries = state.entries();
    std::vector<char> in_subspace(entries.size(), 0);
    std::vector<Complex> tilde(config.dimension());
    for (std::size_t j = 0; j < tilde.size(); ++j) {
        const std::size_t idx = state.tilde_index(j);
        in_subspace[idx] = 1;
        tilde[j] = entries[idx];
    }

    double leakage = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (in_subspace[i] == 0) {
            leakage += std::norm(entries[i]);
        }
    }
    if (leakage >= kLeakageTolerance) {
        throw LeakageError("state has weight " + std::to_string(leakage) + " outside the tilde subspace");
    }

    const auto first = std::find_if(tilde.begin(), tilde.end(),
                                    [](const Complex &c) { return std::abs(c) > kLeakageTolerance; });
    if (first != tilde.end()) {
        const Complex fix = std::conj(*first) / std::abs(*first);
        for (auto &c : tilde) {
            c *= fix;
        }
    }
    return {AmplitudeVector(std::move(tilde), Basis::Tilde), leakage};
}

} // namespace eqc
