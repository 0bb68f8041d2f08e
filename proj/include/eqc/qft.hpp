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
 * Quantum Fourier transform on the effective register, as a dense unitary
 * and as a Hadamard / controlled-phase / swap circuit.
 *
 * Forward convention: |j> -> N^{-1/2} sum_k e^{+2 pi i k j / N} |k>.
 * Qubit q of a circuit addresses bit weight 2^{n-1-q}, so qubit 0 is the
 * most significant bit of the basis index.
 */
#pragma once

#include "eqc/types.hpp"

#include <variant>

namespace eqc {

/// Largest register for which an N x N matrix is materialized or applied.
inline constexpr unsigned kMaxDenseQubits = 12;

class DenseUnitary {
  public:
    /// Row-major N x N entries.
    DenseUnitary(std::size_t dimension, std::vector<Complex> entries);

    static DenseUnitary identity(std::size_t dimension);

    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    [[nodiscard]] const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] DenseUnitary adjoint() const;
    [[nodiscard]] DenseUnitary operator*(const DenseUnitary &rhs) const;
    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;

    /// max |(U^dagger U - I)_{rc}|.
    [[nodiscard]] double unitarity_deviation() const;

    /// max |U_{rc} - V_{rc}|.
    [[nodiscard]] double max_deviation(const DenseUnitary &other) const;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

struct Hadamard {
    unsigned target;
};

/// diag(1, 1, 1, e^{i angle}) on (control, target).
struct ControlledPhase {
    unsigned control;
    unsigned target;
    double angle;
};

struct Swap {
    unsigned a;
    unsigned b;
};

using Gate = std::variant<Hadamard, ControlledPhase, Swap>;

class GateCircuit {
  public:
    explicit GateCircuit(unsigned qubits) : qubits_(qubits) {}

    /// Throws ConfigError on out-of-range qubits or non-finite angles.
    void append(const Gate &gate);

    [[nodiscard]] unsigned qubits() const noexcept { return qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

    /// In-place application; amplitudes.size() must be 2^qubits.
    void apply(std::span<Complex> amplitudes) const;

    /// Column-by-column composition, limited to kMaxDenseQubits.
    [[nodiscard]] DenseUnitary to_dense() const;

    /// Reverse order with negated angles.
    [[nodiscard]] GateCircuit inverse() const;

  private:
    unsigned qubits_;
    std::vector<Gate> gates_;
};

[[nodiscard]] std::size_t count_hadamards(const GateCircuit &circuit);
[[nodiscard]] std::size_t count_controlled_phases(const GateCircuit &circuit);
[[nodiscard]] std::size_t count_swaps(const GateCircuit &circuit);

enum class QftMethod { Dense, Circuit };

/// Entry (k, j) = N^{-1/2} e^{2 pi i k j / N}.
[[nodiscard]] DenseUnitary qft_dense(const RegisterConfig &config);

/// n(n+1)/2 + floor(n/2) gates, ending in the bit-reversal swap network.
[[nodiscard]] GateCircuit build_qft_circuit(const RegisterConfig &config);

[[nodiscard]] GateCircuit build_inverse_qft_circuit(const RegisterConfig &config);

[[nodiscard]] AmplitudeVector qft_apply(const AmplitudeVector &state, const RegisterConfig &config,
                                        QftMethod method);

/// Readout map: returns the computational-basis amplitudes sum_j c_j |j>.
[[nodiscard]] AmplitudeVector inverse_qft_apply(const AmplitudeVector &state, const RegisterConfig &config,
                                                QftMethod method);

} // namespace eqc
