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
#include "fqvqe/state_vector.hpp"

#include "fqvqe/error.hpp"
#include "fqvqe/gate_apply.hpp"
#include "fqvqe/simd/kernels.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace fqvqe {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 26) {
        throw DomainError("StateVector: qubit count must be in [1, 26]");
    }
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps,
                                         double norm_tolerance) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw DomainError("StateVector: length must be a power of two >= 2");
    }
    const auto q = static_cast<std::size_t>(std::countr_zero(amps.size()));
    StateVector s(q, std::move(amps));
    if (std::abs(s.norm() - 1.0) > norm_tolerance) {
        throw DomainError("StateVector: amplitudes are not normalized");
    }
    return s;
}

StateVector StateVector::normalized(std::vector<cplx> amps) {
    double n2 = 0.0;
    for (const auto &a : amps) {
        n2 += std::norm(a);
    }
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw DomainError("StateVector: cannot normalize a zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amps) {
        a *= inv;
    }
    return from_amplitudes(std::move(amps), 1e-12);
}

double StateVector::norm() const {
    const auto &k = simd::active_kernels();
    return std::sqrt(k.dot_complex(amps_.data(), amps_.data(), amps_.size()).real());
}

void StateVector::apply(const Gate &gate, double theta) {
    validate_gate(gate, num_qubits_);
    apply_gate<cplx>(amps_, num_qubits_, gate, theta);
}

void StateVector::apply(const Gate &gate, std::span<const double> params) {
    if (gate.param_slot >= 0 &&
        static_cast<std::size_t>(gate.param_slot) >= params.size()) {
        throw DomainError("StateVector: parameter slot out of range");
    }
    apply(gate, Circuit::angle_of(gate, params));
}

void StateVector::apply(const Circuit &circuit, std::span<const double> params) {
    if (circuit.num_qubits() != num_qubits_) {
        throw DomainError("StateVector: circuit qubit count mismatch");
    }
    if (params.size() != circuit.num_params()) {
        throw DomainError("StateVector: circuit expects " +
                          std::to_string(circuit.num_params()) +
                          " parameters, got " + std::to_string(params.size()));
    }
    apply_circuit<cplx>(amps_, circuit, params);
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner_product: qubit count mismatch");
    }
    return simd::active_kernels().dot_complex(a.amplitudes().data(),
                                              b.amplitudes().data(), a.size());
}

std::vector<double> marginal_probability(const StateVector &state,
                                         std::span<const std::size_t> qubits) {
    const std::size_t Q = state.num_qubits();
    std::vector<std::size_t> shifts;
    shifts.reserve(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= Q) {
            throw DomainError("marginal_probability: qubit out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[j] == qubits[i]) {
                throw DomainError("marginal_probability: duplicate qubit");
            }
        }
        shifts.push_back(Q - 1 - qubits[i]);
    }
    std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t b = 0;
        for (const std::size_t s : shifts) {
            b = (b << 1) | ((idx >> s) & 1U);
        }
        p[b] += std::norm(amps[idx]);
    }
    return p;
}

void apply_qft(StateVector &state, std::span<const std::size_t> reg, bool inverse) {
    if (reg.empty()) {
        throw DomainError("apply_qft: empty register");
    }
    state.apply(qft_circuit(state.num_qubits(), reg, inverse));
}

void apply_qft(StateVector &state, const RegisterLayout &layout,
               std::span<const std::size_t> reg, bool inverse) {
    if (state.num_qubits() != layout.total_qubits()) {
        throw DomainError("apply_qft: state does not match layout");
    }
    if (reg.empty()) {
        throw DomainError("apply_qft: empty register");
    }
    const std::size_t e = reg[0] / layout.qubits_per_electron();
    for (const std::size_t q : reg) {
        if (q >= layout.total_qubits() || q / layout.qubits_per_electron() != e ||
            q == layout.spin_qubit(e)) {
            throw DomainError("apply_qft: register must lie inside one electron's "
                              "spatial qubits (qubit " + std::to_string(q) + ")");
        }
    }
    apply_qft(state, reg, inverse);
}

} // namespace fqvqe
