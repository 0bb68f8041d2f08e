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
#include "eqc/qft.hpp"

#include "eqc/effective_state.hpp"

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using eqc::AmplitudeVector;
using eqc::Complex;
using eqc::QftMethod;
using eqc::RegisterConfig;

namespace {

AmplitudeVector random_state(std::size_t dim, std::mt19937_64 &rng, eqc::Basis basis) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto &c : v) {
        c = {g(rng), g(rng)};
        norm += std::norm(c);
    }
    for (auto &c : v) {
        c /= std::sqrt(norm);
    }
    return {std::move(v), basis};
}

AmplitudeVector basis_state(std::size_t dim, std::size_t j) {
    std::vector<Complex> v(dim);
    v[j] = 1.0;
    return {std::move(v), eqc::Basis::Computational};
}

} // namespace

TEST_CASE("dense QFT small cases", "[qft]") {
    const auto h = eqc::qft_dense(RegisterConfig(1));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h(0, 0) - s) < 1e-15);
    CHECK(std::abs(h(0, 1) - s) < 1e-15);
    CHECK(std::abs(h(1, 0) - s) < 1e-15);
    CHECK(std::abs(h(1, 1) + s) < 1e-15);

    const auto q2 = eqc::qft_dense(RegisterConfig(2));
    const Complex column1[] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(q2(k, 1) - column1[k]) < 1e-15);
    }

    CHECK(eqc::qft_dense(RegisterConfig(3)).unitarity_deviation() < 1e-12);
    CHECK_THROWS_AS(eqc::qft_dense(RegisterConfig(13)), eqc::ConfigError);
}

TEST_CASE("dense QFT maps |j> to the Fourier basis state", "[qft]") {
    for (unsigned n = 1; n <= 6; ++n) {
        const RegisterConfig cfg(n);
        const auto u = eqc::qft_dense(cfg);
        for (std::size_t j = 0; j < cfg.dimension(); ++j) {
            const auto column = u.apply(basis_state(cfg.dimension(), j).entries());
            CHECK(eqc::max_abs_deviation(column, eqc::fourier_basis_state(cfg, j).entries()) < 1e-12);
            for (std::size_t k = 0; k < cfg.dimension(); ++k) {
                CHECK(std::abs(u(k, j) - eqc::testing::dft_entry(cfg.dimension(), k, j)) < 1e-13);
            }
        }
    }
}

TEST_CASE("inverse QFT circuit structure", "[qft]") {
    const auto c1 = eqc::build_inverse_qft_circuit(RegisterConfig(1));
    REQUIRE(c1.size() == 1);
    CHECK(std::holds_alternative<eqc::Hadamard>(c1.gates().front()));

    const auto c2 = eqc::build_inverse_qft_circuit(RegisterConfig(2));
    CHECK(c2.size() == 4);
    CHECK(eqc::count_hadamards(c2) == 2);
    CHECK(eqc::count_controlled_phases(c2) == 1);
    CHECK(eqc::count_swaps(c2) == 1);

    for (unsigned n = 1; n <= 12; ++n) {
        const auto c = eqc::build_inverse_qft_circuit(RegisterConfig(n));
        CHECK(c.size() == n * (n + 1) / 2 + n / 2);
        for (const auto &gate : c.gates()) {
            if (const auto *cp = std::get_if<eqc::ControlledPhase>(&gate)) {
                // Angles are -pi / 2^k for k >= 1.
                const double k = std::log2(std::numbers::pi / -cp->angle);
                CHECK(k == Catch::Approx(std::round(k)).margin(1e-12));
                CHECK(k >= 1.0);
            }
        }
    }
}

TEST_CASE("circuit composes to the dense inverse QFT", "[qft]") {
    for (unsigned n = 1; n <= 7; ++n) {
        const RegisterConfig cfg(n);
        const auto expected = eqc::qft_dense(cfg).adjoint();
        CHECK(eqc::build_inverse_qft_circuit(cfg).to_dense().max_deviation(expected) <= 1e-10);
        CHECK(eqc::build_qft_circuit(cfg).to_dense().max_deviation(eqc::qft_dense(cfg)) <= 1e-10);
    }
}

TEST_CASE("inverse QFT readout examples", "[qft]") {
    const RegisterConfig one(1);
    const auto zero = eqc::inverse_qft_apply(eqc::prepare_final_state(one, eqc::PhaseFraction(0.0)), one,
                                             QftMethod::Dense);
    CHECK(zero.basis() == eqc::Basis::Computational);
    CHECK(std::abs(zero[0] - 1.0) < 1e-15);
    CHECK(std::abs(zero[1]) < 1e-15);

    const auto half = eqc::inverse_qft_apply(eqc::prepare_final_state(one, eqc::PhaseFraction(0.5)), one,
                                             QftMethod::Circuit);
    CHECK(std::abs(half[0]) < 1e-15);
    CHECK(std::abs(half[1] - 1.0) < 1e-15);

    const RegisterConfig three(3);
    const auto psi = eqc::prepare_final_state(three, eqc::PhaseFraction(0.3));
    for (auto method : {QftMethod::Dense, QftMethod::Circuit}) {
        const auto out = eqc::inverse_qft_apply(psi, three, method);
        CHECK(eqc::max_abs_deviation(out.entries(), eqc::amplitudes(three, eqc::PhaseFraction(0.3))) < 1e-12);
        CHECK(std::abs(out.norm_squared() - 1.0) < 1e-12);
    }
    const auto oracle = eqc::testing::direct_inverse_dft(eqc::testing::tensor_product_state(3, 0.3));
    CHECK(eqc::max_abs_deviation(eqc::inverse_qft_apply(psi, three, QftMethod::Dense).entries(), oracle) < 1e-12);

    CHECK_THROWS_AS(eqc::inverse_qft_apply(psi, RegisterConfig(2), QftMethod::Dense), eqc::ConfigError);
}

TEST_CASE("QFT invariants on random states", "[qft][property]") {
    std::mt19937_64 rng(99);
    for (unsigned n = 1; n <= 10; ++n) {
        const RegisterConfig cfg(n);
        for (int trial = 0; trial < 3; ++trial) {
            const auto psi = random_state(cfg.dimension(), rng, eqc::Basis::Computational);
            const auto dense = eqc::inverse_qft_apply(psi, cfg, QftMethod::Dense);
            const auto circuit = eqc::inverse_qft_apply(psi, cfg, QftMethod::Circuit);
            CHECK(std::abs(dense.norm_squared() - 1.0) < 1e-12);
            CHECK(std::abs(circuit.norm_squared() - 1.0) < 1e-12);
            CHECK(eqc::max_abs_deviation(dense.entries(), circuit.entries()) < 1e-10);

            const auto back = eqc::qft_apply(circuit, cfg, QftMethod::Circuit);
            CHECK(eqc::max_abs_deviation(back.entries(), psi.entries()) < 1e-10);
        }
        for (std::size_t j = 0; j < cfg.dimension(); j += std::max<std::size_t>(1, cfg.dimension() / 16)) {
            const auto out = eqc::inverse_qft_apply(eqc::fourier_basis_state(cfg, j), cfg, QftMethod::Circuit);
            CHECK(eqc::max_abs_deviation(out.entries(), basis_state(cfg.dimension(), j).entries()) < 1e-10);
        }
    }
}

TEST_CASE("gate validation", "[qft]") {
    eqc::GateCircuit c(2);
    CHECK_THROWS_AS(c.append(eqc::Hadamard{2}), eqc::ConfigError);
    CHECK_THROWS_AS(c.append(eqc::ControlledPhase{0, 0, 1.0}), eqc::ConfigError);
    CHECK_THROWS_AS(c.append(eqc::ControlledPhase{0, 1, std::nan("")}), eqc::ConfigError);
    CHECK_THROWS_AS(c.append(eqc::Swap{1, 1}), eqc::ConfigError);
    CHECK_NOTHROW(c.append(eqc::Swap{0, 1}));
}
