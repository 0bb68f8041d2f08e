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
 * Core value types shared by every module: the phase being estimated,
 * the physical clock scenario, the register geometry and state vectors.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqc {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Invalid user-supplied parameters (bad n, index out of range, ...).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Dimensionless phase E*dt/(2*pi), always held in [0, 1).
class PhaseFraction {
  public:
    constexpr PhaseFraction() = default;

    /// Any finite real is accepted and reduced modulo 1.
    explicit PhaseFraction(double raw);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(PhaseFraction, PhaseFraction) = default;

  private:
    double value_ = 0.0;
};

/// Two clocks with gap E (hbar = 1) that accumulated proper times t_A, t_B.
struct ClockScenario {
    double energy_gap = 1.0;
    double proper_time_a = 0.0;
    double proper_time_b = 0.0;

    [[nodiscard]] double delta_t() const noexcept { return proper_time_b - proper_time_a; }

    /// (E * dt / 2pi) mod 1.
    [[nodiscard]] PhaseFraction phase() const;

    /// True when E * dt falls outside [0, 2pi), i.e. dt is only known modulo 2pi/E.
    [[nodiscard]] bool aliased() const;

    void validate() const;
};

/// Effective register of n qubits: dimension N = 2^n, 2(N-1) physical clocks.
class RegisterConfig {
  public:
    static constexpr unsigned kDefaultMaxQubits = 24;

    explicit RegisterConfig(unsigned n, unsigned max_qubits = kDefaultMaxQubits);

    [[nodiscard]] unsigned qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return std::size_t{1} << n_; }
    [[nodiscard]] std::size_t clock_count() const noexcept { return 2 * (dimension() - 1); }

    friend bool operator==(const RegisterConfig &, const RegisterConfig &) = default;

  private:
    unsigned n_;
};

enum class Basis { Tilde, Computational, Fourier };

[[nodiscard]] std::string to_string(Basis basis);

/// Unit-norm complex vector of length N tagged with the basis it is expressed in.
class AmplitudeVector {
  public:
    static constexpr double kNormTolerance = 1e-12;

    AmplitudeVector(std::vector<Complex> entries, Basis basis);

    [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] Basis basis() const noexcept { return basis_; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// Throws ConfigError if the length is not config.dimension().
    void require_dimension(const RegisterConfig &config) const;

  private:
    std::vector<Complex> entries_;
    Basis basis_;
};

/// <a|b> with the first argument conjugated.
[[nodiscard]] Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// max_k |a_k - b_k|; sizes must match.
[[nodiscard]] double max_abs_deviation(std::span<const Complex> a, std::span<const Complex> b);

} // namespace eqc
