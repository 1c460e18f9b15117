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
#include "fqvqe/ansatz.hpp"

#include "fqvqe/error.hpp"

#include <algorithm>
#include <cctype>

namespace fqvqe {
namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

// Appends `layers` hardware-efficient layers over `span` reading slots
// starting at `first_slot`.
void add_he_layers(Circuit &c, const std::vector<std::size_t> &span,
                   std::size_t layers, std::size_t first_slot) {
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t k = 0; k < span.size(); ++k) {
            c.add(Gate::ry(span[k], static_cast<int>(first_slot + l * span.size() + k)));
        }
        for (std::size_t k = 0; k + 1 < span.size(); ++k) {
            c.add(Gate::cnot(span[k], span[k + 1]));
        }
    }
}

} // namespace

std::string_view variant_name(Variant v) noexcept {
    switch (v) {
    case Variant::SN: return "SN";
    case Variant::HF: return "HF";
    case Variant::MC: return "MC";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    const auto u = upper(name);
    if (u == "SN") return Variant::SN;
    if (u == "HF") return Variant::HF;
    if (u == "MC") return Variant::MC;
    throw DomainError("unknown architecture '" + std::string(name) + "'");
}

std::string_view two_body_gate_name(TwoBodyGate g) noexcept {
    return g == TwoBodyGate::RSP ? "RSP" : "RZZ";
}

TwoBodyGate parse_two_body_gate(std::string_view name) {
    const auto u = upper(name);
    if (u == "RSP") return TwoBodyGate::RSP;
    if (u == "RZZ") return TwoBodyGate::RZZ;
    throw DomainError("unknown two-body gate '" + std::string(name) + "'");
}

void Architecture::validate() const {
    if (he_layers < 1) {
        throw DomainError("architecture: he_layers must be >= 1");
    }
    switch (variant) {
    case Variant::SN:
        if (sn_blocks < 1) throw DomainError("architecture: sn_blocks must be >= 1");
        break;
    case Variant::HF:
        if (one_body_blocks < 1) {
            throw DomainError("architecture: one_body_blocks must be >= 1");
        }
        break;
    case Variant::MC:
        if (one_body_blocks < 1 || two_body_blocks + 1 != one_body_blocks) {
            throw DomainError("architecture: MC needs two_body_blocks == "
                              "one_body_blocks - 1");
        }
        break;
    }
}

Circuit build_seed(const RegisterLayout &layout) {
    if (layout.electrons != 2) {
        throw UnsupportedError("seed state is implemented for two electrons only");
    }
    const std::size_t s0 = layout.spin_qubit(0);
    const std::size_t s1 = layout.spin_qubit(1);
    Circuit c(layout.total_qubits());
    c.add(Gate::x(s0));
    c.add(Gate::h(s0));
    c.add(Gate::x(s1));
    c.add(Gate::cnot(s0, s1));
    return c;
}

Circuit build_one_body_block(const RegisterLayout &layout, std::size_t he_layers) {
    if (layout.electrons != 2) {
        throw UnsupportedError("one-body block is implemented for two electrons only");
    }
    Circuit c(layout.total_qubits());
    const std::size_t first = c.reserve_params(he_layers * layout.qubits_per_electron());
    for (std::size_t e = 0; e < layout.electrons; ++e) {
        add_he_layers(c, layout.register_qubits(e), he_layers, first);
    }
    return c;
}

Circuit build_two_body_block(const RegisterLayout &layout, TwoBodyGate gate) {
    if (layout.electrons != 2) {
        throw UnsupportedError("two-body block is implemented for two electrons only");
    }
    const std::size_t width = layout.qubits_per_electron();
    Circuit c(layout.total_qubits());
    const std::size_t first = c.reserve_params(width);
    for (std::size_t k = 0; k < width; ++k) {
        const auto slot = static_cast<int>(first + k);
        const std::size_t a = layout.first_qubit(0) + k;
        const std::size_t b = layout.first_qubit(1) + k;
        c.add(gate == TwoBodyGate::RSP ? Gate::rsp(a, b, slot) : Gate::rzz(a, b, slot));
    }
    return c;
}

Circuit build_sn_block(const RegisterLayout &layout, std::size_t he_layers) {
    std::vector<std::size_t> all(layout.total_qubits());
    for (std::size_t q = 0; q < all.size(); ++q) {
        all[q] = q;
    }
    Circuit c(layout.total_qubits());
    const std::size_t first = c.reserve_params(he_layers * all.size());
    add_he_layers(c, all, he_layers, first);
    return c;
}

AnsatzCircuit build_architecture(const Architecture &arch,
                                 const RegisterLayout &layout) {
    arch.validate();
    AnsatzCircuit out{build_seed(layout), {}};
    auto push = [&](const Circuit &block, const char *kind) {
        const std::size_t offset = out.circuit.num_params();
        out.circuit.append(block, offset);
        out.blocks.push_back({kind, offset, block.num_params()});
    };
    switch (arch.variant) {
    case Variant::SN: {
        const Circuit block = build_sn_block(layout, arch.he_layers);
        for (std::size_t b = 0; b < arch.sn_blocks; ++b) {
            push(block, "sn");
        }
        break;
    }
    case Variant::HF: {
        const Circuit block = build_one_body_block(layout, arch.he_layers);
        for (std::size_t b = 0; b < arch.one_body_blocks; ++b) {
            push(block, "one_body");
        }
        break;
    }
    case Variant::MC: {
        const Circuit one = build_one_body_block(layout, arch.he_layers);
        const Circuit two = build_two_body_block(layout, arch.two_body_gate);
        for (std::size_t b = 0; b < arch.one_body_blocks; ++b) {
            push(one, "one_body");
            if (b < arch.two_body_blocks) {
                push(two, "two_body");
            }
        }
        break;
    }
    }
    return out;
}

StateVector apply_ansatz(const AnsatzCircuit &ansatz, std::span<const double> theta) {
    if (theta.size() != ansatz.num_params()) {
        throw DomainError("apply_ansatz: expected " +
                          std::to_string(ansatz.num_params()) + " parameters, got " +
                          std::to_string(theta.size()));
    }
    StateVector s(ansatz.circuit.num_qubits());
    s.apply(ansatz.circuit, theta);
    return s;
}

StateVector apply_ansatz(const Architecture &arch, const RegisterLayout &layout,
                         std::span<const double> theta) {
    return apply_ansatz(build_architecture(arch, layout), theta);
}

} // namespace fqvqe
