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
 * Brute-force simulation of every physical clock qubit, used to certify
 * that the protocol reduces exactly to the effective 2^n-dimensional state.
 *
 * Layout: groups k = n-1 down to 0; each group holds 2^k A-clocks followed
 * by 2^k B-clocks. The first listed qubit is the most significant bit of
 * the physical basis index.
 */
#pragma once

#include "eqc/types.hpp"

namespace eqc {

/// Physical dimension 2^{2(N-1)} = 2^14 at n = 3.
inline constexpr unsigned kMaxOracleQubits = 3;

/// Subspace leakage at or above this level is a simulator bug.
inline constexpr double kLeakageTolerance = 1e-12;

class LeakageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ClockLabel { A, B };

struct QubitSlot {
    unsigned group; ///< k: the group holds 2^k pairs
    ClockLabel label;
    unsigned copy;
};

class PhysicalState {
  public:
    PhysicalState(RegisterConfig config, std::vector<Complex> entries);

    [[nodiscard]] const RegisterConfig &config() const noexcept { return config_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }
    [[nodiscard]] const std::vector<QubitSlot> &layout() const noexcept { return layout_; }
    [[nodiscard]] unsigned qubit_count() const noexcept { return static_cast<unsigned>(layout_.size()); }
    [[nodiscard]] double norm_squared() const noexcept;

    /// Basis index of the physical product state that encodes tilde index j.
    [[nodiscard]] std::size_t tilde_index(std::size_t j) const;

    /// Bit masks selecting all A-clock and all B-clock qubits.
    [[nodiscard]] std::size_t mask(ClockLabel label) const;

  private:
    RegisterConfig config_;
    std::vector<QubitSlot> layout_;
    std::vector<Complex> entries_;
};

[[nodiscard]] std::vector<QubitSlot> physical_layout(const RegisterConfig &config);

/// (x)_{k=n-1..0} (|0..0>_A |1..1>_B + |1..1>_A |0..0>_B)/sqrt(2), 2^k copies per side.
[[nodiscard]] PhysicalState prepare_physical(const RegisterConfig &config);

/// Each clock in |1> picks up e^{-i E t} with its own proper time; global phase kept.
[[nodiscard]] PhysicalState evolve_physical(const PhysicalState &state, const ClockScenario &scenario);

struct TildeProjection {
    AmplitudeVector amplitudes;
    double leakage; ///< weight outside the tilde subspace
};

/// Overlaps with the 2^n tilde product states, global phase fixed so the
/// first nonzero entry is real positive. Throws LeakageError on leakage.
[[nodiscard]] TildeProjection project_to_tilde(const PhysicalState &state, const RegisterConfig &config);

} // namespace eqc
