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
 * Dense state-vector simulator.
 */
#pragma once

#include "fqvqe/circuit.hpp"
#include "fqvqe/gate.hpp"
#include "fqvqe/layout.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fqvqe {

/// Normalized amplitude vector over 2^Q basis states; qubit 0 is the most
/// significant bit of the basis index.
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits (1 <= Q <= 26).
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of `amps`; length must be a power of two and the
    /// norm must be 1 within `norm_tolerance`.
    static StateVector from_amplitudes(std::vector<cplx> amps,
                                       double norm_tolerance = 1e-10);
    /// Same, rescaling to unit norm first (throws on a zero vector).
    static StateVector normalized(std::vector<cplx> amps);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const cplx &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;

    /// Validates and applies one gate at angle `theta`.
    void apply(const Gate &gate, double theta = 0.0);
    /// Applies `gate` with its angle resolved from `params`.
    void apply(const Gate &gate, std::span<const double> params);
    void apply(const Circuit &circuit, std::span<const double> params = {});

  private:
    StateVector(std::size_t num_qubits, std::vector<cplx> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    std::size_t num_qubits_;
    std::vector<cplx> amps_;
};

/// <a|b>, conjugating a.
[[nodiscard]] cplx inner_product(const StateVector &a, const StateVector &b);

/// Probability table over 2^|qubits| outcomes; the first listed qubit is the
/// most significant bit of the outcome index.
[[nodiscard]] std::vector<double>
marginal_probability(const StateVector &state, std::span<const std::size_t> qubits);

/// Register-level QFT on arbitrary distinct qubits (see qft_circuit).
void apply_qft(StateVector &state, std::span<const std::size_t> reg,
               bool inverse = false);

/// QFT on one electron's spatial register. Throws DomainError if `reg` is
/// not a subset of spatial qubits of a single electron (e.g. includes a spin
/// qubit).
void apply_qft(StateVector &state, const RegisterLayout &layout,
               std::span<const std::size_t> reg, bool inverse = false);

} // namespace fqvqe
