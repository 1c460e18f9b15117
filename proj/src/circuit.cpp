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
#include "fqvqe/circuit.hpp"

#include "fqvqe/error.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace fqvqe {

void Circuit::add(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    if (gate.param_slot >= 0 &&
        static_cast<std::size_t>(gate.param_slot) >= num_params_) {
        throw DomainError("circuit: parameter slot " +
                          std::to_string(gate.param_slot) + " out of range");
    }
    if (gate.param_slot >= 0 && !is_rotation(gate.kind)) {
        throw DomainError("circuit: " + std::string(gate_name(gate.kind)) +
                          " takes no parameter");
    }
    gates_.push_back(gate);
}

void Circuit::append(const Circuit &other, std::size_t slot_offset) {
    if (other.num_qubits_ != num_qubits_) {
        throw DomainError("circuit: qubit count mismatch in append");
    }
    num_params_ = std::max(num_params_, slot_offset + other.num_params_);
    for (Gate g : other.gates_) {
        if (g.param_slot >= 0) {
            g.param_slot += static_cast<int>(slot_offset);
        }
        gates_.push_back(g);
    }
}

bool Circuit::is_real() const noexcept {
    return std::all_of(gates_.begin(), gates_.end(),
                       [](const Gate &g) { return is_real_gate(g.kind); });
}

Circuit qft_circuit(std::size_t num_qubits, std::span<const std::size_t> reg,
                    bool inverse) {
    const std::size_t L = reg.size();
    std::vector<Gate> gates;
    for (std::size_t j = 0; j < L; ++j) {
        gates.push_back(Gate::h(reg[j]));
        for (std::size_t m = j + 1; m < L; ++m) {
            const double phi =
                2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << (m - j + 1));
            gates.push_back(Gate::cphase(reg[m], reg[j], phi));
        }
    }
    for (std::size_t j = 0; j < L / 2; ++j) {
        gates.push_back(Gate::swap(reg[j], reg[L - 1 - j]));
    }
    Circuit c(num_qubits);
    if (inverse) {
        std::reverse(gates.begin(), gates.end());
        for (Gate &g : gates) {
            g.angle = -g.angle;
        }
    }
    for (const Gate &g : gates) {
        c.add(g);
    }
    return c;
}

} // namespace fqvqe
