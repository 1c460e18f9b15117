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

#include "fqvqe/program.hpp"

#include "fqvqe/gate_apply.hpp"

#include <algorithm>
#include <complex>

namespace fqvqe {
namespace {

bool is_permutation_gate(const Gate &g) {
    return g.kind == GateKind::X || g.kind == GateKind::CNOT || g.kind == GateKind::SWAP;
}

std::size_t local_bit(const std::vector<std::size_t> &qubits, std::size_t q) {
    return static_cast<std::size_t>(std::find(qubits.begin(), qubits.end(), q) -
                                    qubits.begin());
}

BasisPermutation make_permutation(std::size_t num_qubits, std::span<const Gate> run) {
    BasisPermutation p;
    for (const Gate &g : run) {
        for (std::size_t k = 0; k < g.arity(); ++k) {
            if (std::find(p.qubits.begin(), p.qubits.end(), g.qubits[k]) == p.qubits.end()) {
                p.qubits.push_back(g.qubits[k]);
            }
        }
    }
    std::sort(p.qubits.begin(), p.qubits.end());
    const std::size_t k = p.qubits.size();
    const std::size_t local = std::size_t{1} << k;
    p.offsets.resize(local);
    p.image.resize(local);
    std::size_t mask = 0;
    for (std::size_t b = 0; b < k; ++b) {
        mask |= qubit_stride(num_qubits, p.qubits[b]);
    }
    for (std::size_t j = 0; j < local; ++j) {
        std::size_t off = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if ((j >> b) & 1U) {
                off |= qubit_stride(num_qubits, p.qubits[b]);
            }
        }
        p.offsets[j] = off;
        std::size_t x = j;
        for (const Gate &g : run) {
            const std::size_t a = local_bit(p.qubits, g.qubits[0]);
            const std::size_t b = local_bit(p.qubits, g.qubits[1]);
            switch (g.kind) {
            case GateKind::X:
                x ^= std::size_t{1} << a;
                break;
            case GateKind::CNOT:
                if ((x >> a) & 1U) {
                    x ^= std::size_t{1} << b;
                }
                break;
            default: {
                const std::size_t ba = (x >> a) & 1U;
                const std::size_t bb = (x >> b) & 1U;
                if (ba != bb) {
                    x ^= (std::size_t{1} << a) | (std::size_t{1} << b);
                }
            }
            }
        }
        p.image[j] = static_cast<std::uint32_t>(x);
    }
    const std::size_t n = std::size_t{1} << num_qubits;
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & mask) == 0) {
            p.outer.push_back(i);
        }
    }
    p.run = 1;
    while (p.run < p.outer.size() && p.outer[p.run] == p.run) {
        ++p.run;
    }
    return p;
}

} // namespace

template <class T>
void BasisPermutation::apply(std::span<const T> in, std::span<T> out, bool inverse) const {
    if (run >= 4) {
        for (std::size_t j = 0; j < offsets.size(); ++j) {
            const std::size_t src = inverse ? offsets[image[j]] : offsets[j];
            const std::size_t dst = inverse ? offsets[j] : offsets[image[j]];
            for (std::size_t c = 0; c < outer.size(); c += run) {
                const T *s = in.data() + outer[c] + src;
                std::copy(s, s + run, out.data() + outer[c] + dst);
            }
        }
        return;
    }
    const std::size_t local = offsets.size();
    for (const std::size_t o : outer) {
        const T *s = in.data() + o;
        T *d = out.data() + o;
        if (inverse) {
            for (std::size_t j = 0; j < local; ++j) {
                d[offsets[j]] = s[offsets[image[j]]];
            }
        } else {
            for (std::size_t j = 0; j < local; ++j) {
                d[offsets[image[j]]] = s[offsets[j]];
            }
        }
    }
}

GateProgram::GateProgram(const Circuit &circuit) : circuit_(circuit) {
    const auto &gates = circuit_.gates();
    std::size_t i = 0;
    while (i < gates.size()) {
        if (!is_permutation_gate(gates[i])) {
            steps_.push_back({i, -1});
            ++i;
            continue;
        }
        std::size_t end = i;
        std::vector<std::size_t> touched;
        while (end < gates.size() && is_permutation_gate(gates[end])) {
            std::vector<std::size_t> next = touched;
            for (std::size_t k = 0; k < gates[end].arity(); ++k) {
                if (std::find(next.begin(), next.end(), gates[end].qubits[k]) == next.end()) {
                    next.push_back(gates[end].qubits[k]);
                }
            }
            if (next.size() > kMaxPermutationQubits) {
                break;
            }
            touched = std::move(next);
            ++end;
        }
        if (end - i == 1) {
            steps_.push_back({i, -1});
        } else {
            perms_.push_back(make_permutation(
                circuit_.num_qubits(), std::span<const Gate>(gates.data() + i, end - i)));
            steps_.push_back({i, static_cast<int>(perms_.size() - 1)});
        }
        i = end;
    }
}

template <class T>
void GateProgram::run(std::span<T> amps, std::span<T> scratch,
                      std::span<const double> params) const {
    const auto &gates = circuit_.gates();
    for (const Step &s : steps_) {
        if (s.permutation >= 0) {
            perms_[static_cast<std::size_t>(s.permutation)].apply<T>(amps, scratch, false);
            std::copy(scratch.begin(), scratch.end(), amps.begin());
        } else {
            const Gate &g = gates[s.gate];
            apply_gate<T>(amps, circuit_.num_qubits(), g, Circuit::angle_of(g, params), false);
        }
    }
}

template void BasisPermutation::apply<double>(std::span<const double>, std::span<double>,
                                              bool) const;
template void BasisPermutation::apply<cplx>(std::span<const cplx>, std::span<cplx>,
                                            bool) const;
template void GateProgram::run<double>(std::span<double>, std::span<double>,
                                       std::span<const double>) const;
template void GateProgram::run<cplx>(std::span<cplx>, std::span<cplx>,
                                     std::span<const double>) const;

} // namespace fqvqe
