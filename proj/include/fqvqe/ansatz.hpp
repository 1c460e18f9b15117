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
 * Seed state and variational architectures for the two-electron register.
 *
 * All three architectures start from the spin-singlet seed
 *   (|0>|down> (x) |0>|up> - |0>|up> (x) |0>|down>) / sqrt(2)
 * and differ in what follows it:
 *  - SN: hardware-efficient blocks spanning both registers, no sharing.
 *  - HF: one-body blocks only (the same template U applied as U (x) U).
 *  - MC: one-body and two-body blocks, alternating, starting and ending with
 *        a one-body block.
 *
 * A hardware-efficient layer is a row of Ry gates on every qubit of its span
 * followed by a linear CNOT chain (q0->q1, q1->q2, ...).
 */
#pragma once

#include "fqvqe/circuit.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/state_vector.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqvqe {

enum class Variant { SN, HF, MC };
enum class TwoBodyGate { RSP, RZZ };

[[nodiscard]] std::string_view variant_name(Variant v) noexcept;
/// Accepts "SN", "HF", "MC" (case-insensitive); throws DomainError otherwise.
[[nodiscard]] Variant parse_variant(std::string_view name);
[[nodiscard]] std::string_view two_body_gate_name(TwoBodyGate g) noexcept;
[[nodiscard]] TwoBodyGate parse_two_body_gate(std::string_view name);

struct Architecture {
    Variant variant = Variant::MC;
    std::size_t he_layers = 6;
    std::size_t sn_blocks = 6;
    std::size_t one_body_blocks = 15;
    std::size_t two_body_blocks = 14;
    TwoBodyGate two_body_gate = TwoBodyGate::RSP;

    /// MC requires two_body_blocks == one_body_blocks - 1; all counts >= 1
    /// where used.
    void validate() const;

    bool operator==(const Architecture &) const = default;
};

/// Contiguous parameter range owned by one block.
struct BlockSlice {
    std::string kind; ///< "sn", "one_body" or "two_body"
    std::size_t offset = 0;
    std::size_t length = 0;
};

/// Seed + architecture circuit and the partition of its parameter vector.
struct AnsatzCircuit {
    Circuit circuit;
    std::vector<BlockSlice> blocks;

    [[nodiscard]] std::size_t num_params() const noexcept {
        return circuit.num_params();
    }
};

/// Throws UnsupportedError unless the layout has exactly two electrons.
[[nodiscard]] Circuit build_seed(const RegisterLayout &layout);

/// U (x) U with U a `he_layers`-layer hardware-efficient template on one
/// electron register. Parameters: he_layers * (L + 1), layer-major; both
/// registers read the same slots.
[[nodiscard]] Circuit build_one_body_block(const RegisterLayout &layout,
                                           std::size_t he_layers);

/// One two-qubit gate per corresponding qubit pair (qubit k of electron 0,
/// qubit k of electron 1), each with its own parameter: L + 1 parameters.
[[nodiscard]] Circuit build_two_body_block(const RegisterLayout &layout,
                                           TwoBodyGate gate);

/// Hardware-efficient block over every qubit of the layout, with
/// he_layers * Q parameters.
[[nodiscard]] Circuit build_sn_block(const RegisterLayout &layout,
                                     std::size_t he_layers);

[[nodiscard]] AnsatzCircuit build_architecture(const Architecture &arch,
                                               const RegisterLayout &layout);

/// Simulates the seed + architecture circuit from |0...0>.
[[nodiscard]] StateVector apply_ansatz(const AnsatzCircuit &ansatz,
                                       std::span<const double> theta);
[[nodiscard]] StateVector apply_ansatz(const Architecture &arch,
                                       const RegisterLayout &layout,
                                       std::span<const double> theta);

} // namespace fqvqe
