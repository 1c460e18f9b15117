// Copyright 2026 The fqvqe Authors

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
 * In-place gate application over raw amplitude spans.
 *
 * Templated on the amplitude type: `std::complex<double>` for general states
 * and `double` for the real-arithmetic fast path (valid only for circuits made
 * of real gates, see Circuit::is_real). Targets are assumed validated.
 */
#pragma once

#include "fqvqe/circuit.hpp"
#include "fqvqe/gate.hpp"

#include <cstddef>
#include <span>

namespace fqvqe {

[[nodiscard]] constexpr std::size_t qubit_stride(std::size_t num_qubits,
                                                 std::size_t qubit) noexcept {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

/// amps <- G amps (or G^dagger amps when `adjoint`).
template <class T>
void apply_gate(std::span<T> amps, std::size_t num_qubits, const Gate &gate,
                double theta, bool adjoint = false);

/// <bra| dG/dtheta |ket> for a rotation gate.
template <class T>
T derivative_expval(std::span<const T> bra, std::span<const T> ket,
                    std::size_t num_qubits, const Gate &gate, double theta);

template <class T>
void apply_circuit(std::span<T> amps, const Circuit &circuit,
                   std::span<const double> params);

extern template void apply_gate<double>(std::span<double>, std::size_t,
                                        const Gate &, double, bool);
extern template void apply_gate<cplx>(std::span<cplx>, std::size_t,
                                      const Gate &, double, bool);
extern template double derivative_expval<double>(std::span<const double>,
                                                 std::span<const double>,
                                                 std::size_t, const Gate &, double);
extern template cplx derivative_expval<cplx>(std::span<const cplx>,
                                             std::span<const cplx>, std::size_t,
                                             const Gate &, double);
extern template void apply_circuit<double>(std::span<double>, const Circuit &,
                                           std::span<const double>);
extern template void apply_circuit<cplx>(std::span<cplx>, const Circuit &,
                                         std::span<const double>);

} // namespace fqvqe
