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

#include "eqc/effective_state.hpp"

#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

using eqc::ClockLabel;
using eqc::ClockScenario;
using eqc::Complex;
using eqc::RegisterConfig;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<std::size_t> support(const eqc::PhysicalState &s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s.entries().size(); ++i) {
        if (std::abs(s.entries()[i]) > 1e-15) {
            idx.push_back(i);
        }
    }
    return idx;
}

} // namespace

TEST_CASE("layout lists groups from largest to smallest, A copies first", "[oracle]") {
    const auto layout = eqc::physical_layout(RegisterConfig(2));
    REQUIRE(layout.size() == 6);
    const ClockLabel labels[] = {ClockLabel::A, ClockLabel::A, ClockLabel::B, ClockLabel::B, ClockLabel::A,
                                 ClockLabel::B};
    const unsigned groups[] = {1, 1, 1, 1, 0, 0};
    for (std::size_t p = 0; p < 6; ++p) {
        CHECK(layout[p].label == labels[p]);
        CHECK(layout[p].group == groups[p]);
    }
}

TEST_CASE("prepare_physical reproduces the pair blocks", "[oracle]") {
    const auto one = eqc::prepare_physical(RegisterConfig(1));
    CHECK(one.qubit_count() == 2);
    CHECK(support(one) == std::vector<std::size_t>{0b01, 0b10});
    CHECK(std::abs(one.entries()[0b01] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(one.entries()[0b10] - kInvSqrt2) < 1e-15);

    const auto two = eqc::prepare_physical(RegisterConfig(2));
    CHECK(two.qubit_count() == 6);
    CHECK(support(two) == std::vector<std::size_t>{0b001101, 0b001110, 0b110001, 0b110010});
    for (auto i : support(two)) {
        CHECK(std::abs(two.entries()[i] - 0.5) < 1e-15);
    }

    const auto three = eqc::prepare_physical(RegisterConfig(3));
    CHECK(three.qubit_count() == 14);
    CHECK(three.layout().size() / 2 == 7);
    CHECK(std::abs(three.norm_squared() - 1.0) < 1e-12);
    CHECK(support(three).size() == 8);

    CHECK_THROWS_AS(eqc::prepare_physical(RegisterConfig(4)), eqc::ConfigError);
}

TEST_CASE("evolve_physical applies per-clock phases", "[oracle]") {
    const auto one = eqc::prepare_physical(RegisterConfig(1));

    const ClockScenario same{1.3, 0.7, 0.7};
    const auto evolved = eqc::evolve_physical(one, same);
    const Complex global = std::polar(1.0, -1.3 * 0.7);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(evolved.entries()[i] - one.entries()[i] * global) < 1e-15);
    }

    const ClockScenario flip{1.0, 0.2, 0.2 + std::numbers::pi};
    const auto minus = eqc::evolve_physical(one, flip);
    const Complex ratio = minus.entries()[0b10] / minus.entries()[0b01];
    CHECK(std::abs(ratio - Complex(-1.0, 0.0)) < 1e-14);
    CHECK(std::abs(minus.norm_squared() - 1.0) < 1e-12);

    const RegisterConfig reg2(2);
    const auto two = eqc::prepare_physical(reg2);
    const ClockScenario quarter{1.0, 0.4, 0.4 + std::numbers::pi / 2.0};
    const auto ev2 = eqc::evolve_physical(two, quarter);
    const Complex ref = ev2.entries()[two.tilde_index(0)];
    for (unsigned k = 0; k < 2; ++k) {
        const Complex flipped = ev2.entries()[two.tilde_index(std::size_t{1} << k)];
        CHECK(std::abs(flipped / ref - std::polar(1.0, std::ldexp(1.0, static_cast<int>(k)) * std::numbers::pi / 2.0)) <
              1e-14);
    }
}

TEST_CASE("project_to_tilde matches the effective state", "[oracle]") {
    const RegisterConfig one(1);
    const auto p0 = eqc::project_to_tilde(eqc::evolve_physical(eqc::prepare_physical(one), {1.0, 0.3, 0.3}), one);
    CHECK(eqc::max_abs_deviation(p0.amplitudes.entries(),
                                 eqc::prepare_final_state(one, eqc::PhaseFraction(0.0)).entries()) < 1e-12);
    CHECK(p0.leakage == 0.0);

    const RegisterConfig two(2);
    const ClockScenario quarter{1.0, 0.0, std::numbers::pi / 2.0};
    const auto p2 = eqc::project_to_tilde(eqc::evolve_physical(eqc::prepare_physical(two), quarter), two);
    CHECK(eqc::max_abs_deviation(p2.amplitudes.entries(),
                                 eqc::prepare_final_state(two, eqc::PhaseFraction(0.25)).entries()) < 1e-12);

    const RegisterConfig three(3);
    const auto prepared = eqc::prepare_physical(three);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = u(rng);
        const double t_a = 3.0 * u(rng);
        const ClockScenario sc{1.0, t_a, t_a + eqc::kTwoPi * theta};
        const auto evolved = eqc::evolve_physical(prepared, sc);
        CHECK(std::abs(evolved.norm_squared() - 1.0) < 1e-12);
        const auto proj = eqc::project_to_tilde(evolved, three);
        CHECK(proj.leakage < eqc::kLeakageTolerance);
        CHECK(eqc::max_abs_deviation(proj.amplitudes.entries(),
                                     eqc::prepare_final_state(three, eqc::PhaseFraction(theta)).entries()) < 1e-12);

        ClockScenario shifted = sc;
        shifted.proper_time_a += 1.7;
        shifted.proper_time_b += 1.7;
        const auto proj_shifted = eqc::project_to_tilde(eqc::evolve_physical(prepared, shifted), three);
        CHECK(eqc::max_abs_deviation(proj.amplitudes.entries(), proj_shifted.amplitudes.entries()) < 1e-12);
    }
}

TEST_CASE("project_to_tilde reports leakage", "[oracle]") {
    const RegisterConfig one(1);
    const auto clean = eqc::prepare_physical(one);
    std::vector<Complex> leaky(clean.entries().begin(), clean.entries().end());
    leaky[0b01] = 0.6;
    leaky[0b10] = 0.6;
    leaky[0b11] = std::sqrt(1.0 - 0.72);
    const eqc::PhysicalState bad(one, leaky);
    CHECK_THROWS_AS(eqc::project_to_tilde(bad, one), eqc::LeakageError);
    CHECK_THROWS_AS(eqc::project_to_tilde(clean, RegisterConfig(2)), eqc::ConfigError);
}
