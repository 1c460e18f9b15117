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
 * Gate descriptions and their small unitary matrices.
 *
 * Qubit 0 is the most significant bit of the basis index. For two-qubit
 * gates the 4x4 matrix is written in the basis |q0 q1> = |00>, |01>, |10>,
 * |11> where q0 = qubits[0] (the control for CNOT).
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>

namespace fqvqe {

using cplx = std::complex<double>;
using Matrix2 = std::array<cplx, 4>;
using Matrix4 = std::array<cplx, 16>;

enum class GateKind { X, H, CNOT, SWAP, Ry, Rzz, RSP, CPhase };

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
[[nodiscard]] std::size_t gate_arity(GateKind kind) noexcept;
/// Gates whose matrix depends on an angle.
[[nodiscard]] bool is_rotation(GateKind kind) noexcept;
/// Gates whose matrix is real for every angle.
[[nodiscard]] bool is_real_gate(GateKind kind) noexcept;

struct Gate {
    GateKind kind = GateKind::X;
    std::array<std::size_t, 2> qubits{0, 0};
    /// Index into the parameter vector, or -1 for a fixed `angle`.
    int param_slot = -1;
    double angle = 0.0;

    static Gate x(std::size_t q) { return {GateKind::X, {q, q}}; }
    static Gate h(std::size_t q) { return {GateKind::H, {q, q}}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}};
    }
    static Gate swap(std::size_t a, std::size_t b) {
        return {GateKind::SWAP, {a, b}};
    }
    static Gate ry(std::size_t q, int slot, double angle = 0.0) {
        return {GateKind::Ry, {q, q}, slot, angle};
    }
    static Gate rzz(std::size_t a, std::size_t b, int slot, double angle = 0.0) {
        return {GateKind::Rzz, {a, b}, slot, angle};
    }
    static Gate rsp(std::size_t a, std::size_t b, int slot, double angle = 0.0) {
        return {GateKind::RSP, {a, b}, slot, angle};
    }
    static Gate cphase(std::size_t a, std::size_t b, double angle) {
        return {GateKind::CPhase, {a, b}, -1, angle};
    }

    [[nodiscard]] std::size_t arity() const noexcept { return gate_arity(kind); }
    [[nodiscard]] bool parametric() const noexcept { return param_slot >= 0; }

    bool operator==(const Gate &) const = default;
};

/// Throws DomainError for out-of-range or duplicate targets.
void validate_gate(const Gate &gate, std::size_t num_qubits);

/// Unitary of a one-qubit gate at angle theta.
[[nodiscard]] Matrix2 gate_matrix_1q(GateKind kind, double theta);
/// Unitary of a two-qubit gate at angle theta.
[[nodiscard]] Matrix4 gate_matrix_2q(GateKind kind, double theta);

/// d/dtheta of the rotation unitaries (Ry, Rzz, RSP, CPhase).
[[nodiscard]] Matrix2 gate_derivative_1q(GateKind kind, double theta);
[[nodiscard]] Matrix4 gate_derivative_2q(GateKind kind, double theta);

template <std::size_t N>
[[nodiscard]] std::array<cplx, N> dagger(const std::array<cplx, N> &m) {
    constexpr std::size_t d = N == 4 ? 2 : 4;
    std::array<cplx, N> out{};
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            out[r * d + c] = std::conj(m[c * d + r]);
        }
    }
    return out;
}

} // namespace fqvqe
