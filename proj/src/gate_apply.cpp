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
#include "fqvqe/gate_apply.hpp"

#include "fqvqe/error.hpp"
#include "fqvqe/simd/kernels.hpp"

#include <string>
#include <type_traits>
#include <utility>

namespace fqvqe {
namespace {

template <class T, std::size_t N>
std::array<T, N> narrow(const std::array<cplx, N> &m, GateKind kind) {
    if constexpr (std::is_same_v<T, cplx>) {
        return m;
    } else {
        if (!is_real_gate(kind)) {
            throw DomainError(std::string(gate_name(kind)) +
                              " requires complex amplitudes");
        }
        std::array<double, N> out{};
        for (std::size_t i = 0; i < N; ++i) {
            out[i] = m[i].real();
        }
        return out;
    }
}

template <class T>
void run_1q(std::span<T> amps, std::size_t stride, const std::array<T, 4> &m) {
    const auto &k = simd::active_kernels();
    if constexpr (std::is_same_v<T, cplx>) {
        k.apply_1q_complex(amps.data(), amps.size(), stride, m.data());
    } else {
        k.apply_1q_real(amps.data(), amps.size(), stride, m.data());
    }
}

template <class T>
void run_2q(std::span<T> amps, std::size_t sa, std::size_t sb,
            const std::array<T, 16> &m) {
    const auto &k = simd::active_kernels();
    if constexpr (std::is_same_v<T, cplx>) {
        k.apply_2q_complex(amps.data(), amps.size(), sa, sb, m.data());
    } else {
        k.apply_2q_real(amps.data(), amps.size(), sa, sb, m.data());
    }
}

template <class T>
void pair_swap(std::span<T> amps, std::size_t st, std::size_t sc) {
    const auto &k = simd::active_kernels();
    if constexpr (std::is_same_v<T, cplx>) {
        k.pair_swap_complex(amps.data(), amps.size(), st, sc);
    } else {
        k.pair_swap_real(amps.data(), amps.size(), st, sc);
    }
}

// Swaps amps[i + off_a] <-> amps[i + off_b] for every i with both target bits
// clear.
template <class T>
void swap_in_quads(std::span<T> amps, std::size_t sa, std::size_t sb,
                   std::size_t off_a, std::size_t off_b) {
    const std::size_t n = amps.size();
    const std::size_t lo = sa < sb ? sa : sb;
    const std::size_t hi = sa < sb ? sb : sa;
    for (std::size_t h = 0; h < n; h += 2 * hi) {
        for (std::size_t b = h; b < h + hi; b += 2 * lo) {
            T *p = amps.data() + b;
            for (std::size_t j = 0; j < lo; ++j) {
                std::swap(p[j + off_a], p[j + off_b]);
            }
        }
    }
}

} // namespace

template <class T>
void apply_gate(std::span<T> amps, std::size_t num_qubits, const Gate &gate,
                double theta, bool adjoint) {
    const std::size_t sa = qubit_stride(num_qubits, gate.qubits[0]);
    switch (gate.kind) {
    case GateKind::X:
        pair_swap(amps, sa, 0);
        return;
    case GateKind::H:
    case GateKind::Ry: {
        auto m = gate_matrix_1q(gate.kind, theta);
        if (adjoint) {
            m = dagger(m);
        }
        run_1q<T>(amps, sa, narrow<T>(m, gate.kind));
        return;
    }
    case GateKind::CNOT: {
        pair_swap(amps, qubit_stride(num_qubits, gate.qubits[1]), sa);
        return;
    }
    case GateKind::SWAP: {
        const std::size_t sb = qubit_stride(num_qubits, gate.qubits[1]);
        swap_in_quads(amps, sa, sb, sa, sb);
        return;
    }
    case GateKind::Rzz:
    case GateKind::RSP:
    case GateKind::CPhase: {
        const std::size_t sb = qubit_stride(num_qubits, gate.qubits[1]);
        auto m = gate_matrix_2q(gate.kind, theta);
        if (adjoint) {
            m = dagger(m);
        }
        run_2q<T>(amps, sa, sb, narrow<T>(m, gate.kind));
        return;
    }
    }
}

template <class T>
T derivative_expval(std::span<const T> bra, std::span<const T> ket,
                    std::size_t num_qubits, const Gate &gate, double theta) {
    const auto &k = simd::active_kernels();
    const std::size_t sa = qubit_stride(num_qubits, gate.qubits[0]);
    if (gate.arity() == 1) {
        const auto m = narrow<T>(gate_derivative_1q(gate.kind, theta), gate.kind);
        if constexpr (std::is_same_v<T, cplx>) {
            return k.expval_1q_complex(bra.data(), ket.data(), ket.size(), sa, m.data());
        } else {
            return k.expval_1q_real(bra.data(), ket.data(), ket.size(), sa, m.data());
        }
    }
    const std::size_t sb = qubit_stride(num_qubits, gate.qubits[1]);
    const auto m = narrow<T>(gate_derivative_2q(gate.kind, theta), gate.kind);
    if constexpr (std::is_same_v<T, cplx>) {
        return k.expval_2q_complex(bra.data(), ket.data(), ket.size(), sa, sb, m.data());
    } else {
        return k.expval_2q_real(bra.data(), ket.data(), ket.size(), sa, sb, m.data());
    }
}

template <class T>
void apply_circuit(std::span<T> amps, const Circuit &circuit,
                   std::span<const double> params) {
    if (params.size() < circuit.num_params()) {
        throw DomainError("apply_circuit: expected " +
                          std::to_string(circuit.num_params()) + " parameters, got " +
                          std::to_string(params.size()));
    }
    for (const Gate &g : circuit.gates()) {
        apply_gate<T>(amps, circuit.num_qubits(), g, Circuit::angle_of(g, params));
    }
}

template void apply_gate<double>(std::span<double>, std::size_t, const Gate &,
                                 double, bool);
template void apply_gate<cplx>(std::span<cplx>, std::size_t, const Gate &,
                               double, bool);
template double derivative_expval<double>(std::span<const double>,
                                          std::span<const double>, std::size_t,
                                          const Gate &, double);
template cplx derivative_expval<cplx>(std::span<const cplx>,
                                      std::span<const cplx>, std::size_t,
                                      const Gate &, double);
template void apply_circuit<double>(std::span<double>, const Circuit &,
                                    std::span<const double>);
template void apply_circuit<cplx>(std::span<cplx>, const Circuit &,
                                  std::span<const double>);

} // namespace fqvqe
