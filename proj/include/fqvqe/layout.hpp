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
#pragma once

#include <cstddef>
#include <vector>

namespace fqvqe {

/// Qubit layout of the first-quantized register: per electron, L spatial
/// qubits (most significant first) followed by one spin qubit; electron
/// registers are concatenated with electron 0 first. Spin bit 0 is "down",
/// 1 is "up".
///
/// With qubit 0 the most significant bit of the basis index, the amplitude of
/// |x_0 s_0, x_1 s_1> sits at index (x_0 * 2 + s_0) * 2^(L+1) + x_1 * 2 + s_1.
struct RegisterLayout {
    std::size_t electrons = 2;
    std::size_t spatial_qubits = 5;

    [[nodiscard]] std::size_t qubits_per_electron() const noexcept {
        return spatial_qubits + 1;
    }
    [[nodiscard]] std::size_t total_qubits() const noexcept {
        return electrons * qubits_per_electron();
    }
    /// Dimension of one electron's register, 2^(L+1).
    [[nodiscard]] std::size_t register_dim() const noexcept {
        return std::size_t{1} << qubits_per_electron();
    }
    [[nodiscard]] std::size_t grid_points() const noexcept {
        return std::size_t{1} << spatial_qubits;
    }
    [[nodiscard]] std::size_t first_qubit(std::size_t electron) const noexcept {
        return electron * qubits_per_electron();
    }
    [[nodiscard]] std::size_t spin_qubit(std::size_t electron) const noexcept {
        return first_qubit(electron) + spatial_qubits;
    }
    [[nodiscard]] std::vector<std::size_t> spatial_register(std::size_t electron) const;
    [[nodiscard]] std::vector<std::size_t> register_qubits(std::size_t electron) const;

    /// Full basis index of (x_e, s_e) for two electrons.
    [[nodiscard]] std::size_t index_of(std::size_t x0, std::size_t s0,
                                       std::size_t x1, std::size_t s1) const noexcept {
        return ((x0 * 2 + s0) * register_dim()) + x1 * 2 + s1;
    }

    bool operator==(const RegisterLayout &) const = default;
};

} // namespace fqvqe
