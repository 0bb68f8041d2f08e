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

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eqc {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

void require_dense_cap(const RegisterConfig &config) {
    if (config.qubits() > kMaxDenseQubits) {
        throw ConfigError("dense QFT limited to n <= " + std::to_string(kMaxDenseQubits));
    }
}

std::size_t bit_of(unsigned qubits, unsigned q) { return std::size_t{1} << (qubits - 1 - q); }

// e^{sign 2 pi i t / N} for t = 0 .. N-1.
std::vector<Complex> roots_of_unity(std::size_t dim, double sign) {
    std::vector<Complex> roots(dim);
    for (std::size_t t = 0; t < dim; ++t) {
        roots[t] = std::polar(1.0, sign * kTwoPi * static_cast<double>(t) / static_cast<double>(dim));
    }
    return roots;
}

// Matrix-free O(N^2) product with the (inverse) DFT matrix.
std::vector<Complex> dense_transform(std::span<const Complex> input, double sign) {
    const std::size_t dim = input.size();
    const auto roots = roots_of_unity(dim, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < dim; ++j) {
            acc += roots[(k * j) & (dim - 1)] * input[j];
        }
        out[k] = acc * scale;
    }
    return out;
}

} // namespace

DenseUnitary::DenseUnitary(std::size_t dimension, std::vector<Complex> entries)
    : dim_(dimension), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw ConfigError("dense matrix entry count does not match dimension");
    }
}

DenseUnitary DenseUnitary::identity(std::size_t dimension) {
    std::vector<Complex> entries(dimension * dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        entries[i * dimension + i] = 1.0;
    }
    return {dimension, std::move(entries)};
}

DenseUnitary DenseUnitary::adjoint() const {
    std::vector<Complex> out(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return {dim_, std::move(out)};
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary &rhs) const {
    if (rhs.dim_ != dim_) {
        throw ConfigError("matrix dimension mismatch");
    }
    std::vector<Complex> out(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = entries_[r * dim_ + k];
            for (std::size_t c = 0; c < dim_; ++c) {
                out[r * dim_ + c] += a * rhs.entries_[k * dim_ + c];
            }
        }
    }
    return {dim_, std::move(out)};
}

std::vector<Complex> DenseUnitary::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw ConfigError("vector length does not match matrix dimension");
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += entries_[r * dim_ + c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double DenseUnitary::unitarity_deviation() const {
    return (adjoint() * *this).max_deviation(identity(dim_));
}

double DenseUnitary::max_deviation(const DenseUnitary &other) const {
    if (other.dim_ != dim_) {
        throw ConfigError("matrix dimension mismatch");
    }
    return max_abs_deviation(entries_, other.entries_);
}

void GateCircuit::append(const Gate &gate) {
    auto in_range = [this](unsigned q) { return q < qubits_; };
    const bool ok = std::visit(Overloaded{
                                   [&](const Hadamard &g) { return in_range(g.target); },
                                   [&](const ControlledPhase &g) {
                                       return in_range(g.control) && in_range(g.target) &&
                                              g.control != g.target && std::isfinite(g.angle);
                                   },
                                   [&](const Swap &g) { return in_range(g.a) && in_range(g.b) && g.a != g.b; },
                               },
                               gate);
    if (!ok) {
        throw ConfigError("gate does not fit a " + std::to_string(qubits_) + "-qubit register");
    }
    gates_.push_back(gate);
}

void GateCircuit::apply(std::span<Complex> amps) const {
    const std::size_t dim = std::size_t{1} << qubits_;
    if (amps.size() != dim) {
        throw ConfigError("state length does not match circuit width");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (const auto &gate : gates_) {
        std::visit(Overloaded{
                       [&](const Hadamard &g) {
                           const std::size_t bit = bit_of(qubits_, g.target);
                           for (std::size_t i = 0; i < dim; ++i) {
                               if ((i & bit) == 0) {
                                   const Complex a = amps[i];
                                   const Complex b = amps[i | bit];
                                   amps[i] = (a + b) * inv_sqrt2;
                                   amps[i | bit] = (a - b) * inv_sqrt2;
                               }
                           }
                       },
                       [&](const ControlledPhase &g) {
                           const std::size_t mask = bit_of(qubits_, g.control) | bit_of(qubits_, g.target);
                           const Complex phase = std::polar(1.0, g.angle);
                           for (std::size_t i = 0; i < dim; ++i) {
                               if ((i & mask) == mask) {
                                   amps[i] *= phase;
                               }
                           }
                       },
                       [&](const Swap &g) {
                           const std::size_t ba = bit_of(qubits_, g.a);
                           const std::size_t bb = bit_of(qubits_, g.b);
                           for (std::size_t i = 0; i < dim; ++i) {
                               if ((i & ba) != 0 && (i & bb) == 0) {
                                   std::swap(amps[i], amps[(i & ~ba) | bb]);
                               }
                           }
                       },
                   },
                   gate);
    }
}

DenseUnitary GateCircuit::to_dense() const {
    if (qubits_ > kMaxDenseQubits) {
        throw ConfigError("circuit too wide to compose densely");
    }
    const std::size_t dim = std::size_t{1} << qubits_;
    std::vector<Complex> entries(dim * dim);
    std::vector<Complex> column(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(column.begin(), column.end(), Complex{});
        column[c] = 1.0;
        apply(column);
        for (std::size_t r = 0; r < dim; ++r) {
            entries[r * dim + c] = column[r];
        }
    }
    return {dim, std::move(entries)};
}

GateCircuit GateCircuit::inverse() const {
    GateCircuit out(qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate gate = *it;
        if (auto *cp = std::get_if<ControlledPhase>(&gate)) {
            cp->angle = -cp->angle;
        }
        out.append(gate);
    }
    return out;
}

std::size_t count_hadamards(const GateCircuit &circuit) {
    return std::count_if(circuit.gates().begin(), circuit.gates().end(),
                         [](const Gate &g) { return std::holds_alternative<Hadamard>(g); });
}

std::size_t count_controlled_phases(const GateCircuit &circuit) {
    return std::count_if(circuit.gates().begin(), circuit.gates().end(),
                         [](const Gate &g) { return std::holds_alternative<ControlledPhase>(g); });
}

std::size_t count_swaps(const GateCircuit &circuit) {
    return std::count_if(circuit.gates().begin(), circuit.gates().end(),
                         [](const Gate &g) { return std::holds_alternative<Swap>(g); });
}

DenseUnitary qft_dense(const RegisterConfig &config) {
    require_dense_cap(config);
    const std::size_t dim = config.dimension();
    const auto roots = roots_of_unity(dim, +1.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> entries(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < dim; ++j) {
            entries[k * dim + j] = roots[(k * j) & (dim - 1)] * scale;
        }
    }
    return {dim, std::move(entries)};
}

GateCircuit build_qft_circuit(const RegisterConfig &config) {
    const unsigned n = config.qubits();
    GateCircuit circuit(n);
    for (unsigned q = 0; q < n; ++q) {
        circuit.append(Hadamard{q});
        for (unsigned r = q + 1; r < n; ++r) {
            // R_m with m = r - q + 1: angle 2 pi / 2^m.
            circuit.append(ControlledPhase{r, q, kTwoPi / std::ldexp(1.0, static_cast<int>(r - q + 1))});
        }
    }
    for (unsigned q = 0; q < n / 2; ++q) {
        circuit.append(Swap{q, n - 1 - q});
    }
    return circuit;
}

GateCircuit build_inverse_qft_circuit(const RegisterConfig &config) {
    return build_qft_circuit(config).inverse();
}

namespace {

AmplitudeVector transform(const AmplitudeVector &state, const RegisterConfig &config, QftMethod method,
                          bool forward) {
    state.require_dimension(config);
    const Basis out_basis = forward ? Basis::Fourier : Basis::Computational;
    if (method == QftMethod::Dense) {
        require_dense_cap(config);
        return {dense_transform(state.entries(), forward ? +1.0 : -1.0), out_basis};
    }
    std::vector<Complex> amps(state.entries().begin(), state.entries().end());
    const GateCircuit circuit = forward ? build_qft_circuit(config) : build_inverse_qft_circuit(config);
    circuit.apply(amps);
    return {std::move(amps), out_basis};
}

} // namespace

AmplitudeVector qft_apply(const AmplitudeVector &state, const RegisterConfig &config, QftMethod method) {
    return transform(state, config, method, true);
}

AmplitudeVector inverse_qft_apply(const AmplitudeVector &state, const RegisterConfig &config,
                                  QftMethod method) {
    return transform(state, config, method, false);
}

} // namespace eqc
