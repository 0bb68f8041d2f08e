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
// Independent reference computations used only by the tests. Nothing here
// calls into the library's closed forms or transforms.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace eqc::testing {

using Cplx = std::complex<double>;

inline constexpr double kTau = 2.0 * std::numbers::pi;

/// Literal Kronecker product of the n single-qubit factors, most significant first.
inline std::vector<Cplx> tensor_product_state(unsigned n, double theta) {
    std::vector<Cplx> state{1.0};
    const double s = 1.0 / std::sqrt(2.0);
    for (int k = static_cast<int>(n) - 1; k >= 0; --k) {
        const Cplx one = std::polar(s, kTau * std::ldexp(1.0, k) * theta);
        std::vector<Cplx> next;
        next.reserve(state.size() * 2);
        for (const auto &a : state) {
            next.push_back(a * s);
            next.push_back(a * one);
        }
        state = std::move(next);
    }
    return state;
}

/// (1/N) sum_{k<N} e^{2 pi i (theta - j/N) k}, term by term.
inline Cplx direct_sum_cj(unsigned n, double theta, std::size_t j) {
    const std::size_t dim = std::size_t{1} << n;
    Cplx acc{};
    for (std::size_t k = 0; k < dim; ++k) {
        acc += std::polar(1.0, kTau * (theta - static_cast<double>(j) / static_cast<double>(dim)) *
                                   static_cast<double>(k));
    }
    return acc / static_cast<double>(dim);
}

/// Entry (k, j) of the forward DFT unitary, computed from the raw definition.
inline Cplx dft_entry(std::size_t dim, std::size_t k, std::size_t j) {
    return std::polar(1.0 / std::sqrt(static_cast<double>(dim)),
                      kTau * static_cast<double>(k) * static_cast<double>(j) / static_cast<double>(dim));
}

/// N^2 inverse DFT of an arbitrary vector.
inline std::vector<Cplx> direct_inverse_dft(const std::vector<Cplx> &v) {
    const std::size_t dim = v.size();
    std::vector<Cplx> out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            out[j] += std::conj(dft_entry(dim, k, j)) * v[k];
        }
    }
    return out;
}

/// min over the three shifted copies of |j - N theta|.
inline double ring_distance(std::size_t dim, double theta, std::size_t j) {
    const double x = static_cast<double>(j) - static_cast<double>(dim) * theta;
    const double n = static_cast<double>(dim);
    return std::min({std::abs(x), std::abs(x + n), std::abs(x - n)});
}

} // namespace eqc::testing
