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
#include "fqvqe/gate.hpp"

#include "fqvqe/error.hpp"

#include <cmath>
#include <string>

namespace fqvqe {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::Ry: return "RY";
    case GateKind::Rzz: return "RZZ";
    case GateKind::RSP: return "RSP";
    case GateKind::CPhase: return "CPHASE";
    }
    return "?";
}

std::size_t gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Ry:
        return 1;
    default:
        return 2;
    }
}

bool is_rotation(GateKind kind) noexcept {
    return kind == GateKind::Ry || kind == GateKind::Rzz ||
           kind == GateKind::RSP || kind == GateKind::CPhase;
}

bool is_real_gate(GateKind kind) noexcept {
    return kind != GateKind::Rzz && kind != GateKind::CPhase;
}

void validate_gate(const Gate &gate, std::size_t num_qubits) {
    const auto name = std::string(gate_name(gate.kind));
    if (gate.qubits[0] >= num_qubits ||
        (gate.arity() == 2 && gate.qubits[1] >= num_qubits)) {
        throw DomainError(name + ": target qubit out of range");
    }
    if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw DomainError(name + ": duplicate target qubits");
    }
}

Matrix2 gate_matrix_1q(GateKind kind, double theta) {
    switch (kind) {
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        return {s, s, s, -s};
    }
    case GateKind::Ry: {
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        return {c, -s, s, c};
    }
    default:
        throw DomainError(std::string(gate_name(kind)) + " is not a one-qubit gate");
    }
}

Matrix4 gate_matrix_2q(GateKind kind, double theta) {
    const cplx I{0.0, 1.0};
    switch (kind) {
    case GateKind::CNOT:
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    case GateKind::SWAP:
        return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    case GateKind::Rzz: {
        const cplx m = std::exp(-I * theta / 2.0);
        const cplx p = std::exp(I * theta / 2.0);
        return {m, 0, 0, 0, 0, p, 0, 0, 0, 0, p, 0, 0, 0, 0, m};
    }
    case GateKind::RSP: {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return {c, 0, 0, -s, 0, 0, 1, 0, 0, 1, 0, 0, s, 0, 0, c};
    }
    case GateKind::CPhase:
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, std::exp(I * theta)};
    default:
        throw DomainError(std::string(gate_name(kind)) + " is not a two-qubit gate");
    }
}

Matrix2 gate_derivative_1q(GateKind kind, double theta) {
    if (kind != GateKind::Ry) {
        throw DomainError(std::string(gate_name(kind)) + " has no one-qubit derivative");
    }
    const double c = 0.5 * std::cos(theta / 2.0);
    const double s = 0.5 * std::sin(theta / 2.0);
    return {-s, -c, c, -s};
}

Matrix4 gate_derivative_2q(GateKind kind, double theta) {
    const cplx I{0.0, 1.0};
    switch (kind) {
    case GateKind::Rzz: {
        const cplx m = -0.5 * I * std::exp(-I * theta / 2.0);
        const cplx p = 0.5 * I * std::exp(I * theta / 2.0);
        return {m, 0, 0, 0, 0, p, 0, 0, 0, 0, p, 0, 0, 0, 0, m};
    }
    case GateKind::RSP: {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return {-s, 0, 0, -c, 0, 0, 0, 0, 0, 0, 0, 0, c, 0, 0, -s};
    }
    case GateKind::CPhase:
        return {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, I * std::exp(I * theta)};
    default:
        throw DomainError(std::string(gate_name(kind)) + " has no two-qubit derivative");
    }
}

} // namespace fqvqe
