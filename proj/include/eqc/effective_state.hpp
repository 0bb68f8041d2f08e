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
 * Post-evolution protocol state in the 2^n-dimensional effective subspace
 * and its Fourier-basis amplitudes.
 *
 * Index convention: j = j_1 2^{n-1} + ... + j_n 2^0, so effective qubit 1
 * (the one carrying phase 2^{n-1} theta) is the most significant bit.
 */
#pragma once

#include "eqc/types.hpp"

namespace eqc {

/// Product state (x)_{k=n-1..0} (|0~> + e^{2 pi i 2^k theta}|1~>)/sqrt(2);
/// entry j equals 2^{-n/2} e^{2 pi i j theta}.
[[nodiscard]] AmplitudeVector prepare_final_state(const RegisterConfig &config, PhaseFraction theta);

/// c_j = <j~|Psi_f> = (1/N) sum_k z^k with z = e^{2 pi i (theta - j/N)}.
///
/// Evaluated through the closed form (1/N)(z^N - 1)/(z - 1), with both
/// phases reduced to the principal branch first so that exact fractions
/// theta = j'/N give exactly 1 on the peak and exactly 0 elsewhere.
[[nodiscard]] Complex amplitude_cj(const RegisterConfig &config, PhaseFraction theta, std::size_t j);

/// All N amplitudes c_0 .. c_{N-1}.
[[nodiscard]] std::vector<Complex> amplitudes(const RegisterConfig &config, PhaseFraction theta);

/// |j~> with entry k equal to N^{-1/2} e^{2 pi i k j / N}.
[[nodiscard]] AmplitudeVector fourier_basis_state(const RegisterConfig &config, std::size_t j);

} // namespace eqc
