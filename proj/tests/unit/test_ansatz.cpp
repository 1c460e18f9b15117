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
#include "fqvqe/analysis.hpp"
#include "fqvqe/ansatz.hpp"
#include "fqvqe/error.hpp"
#include "fqvqe/vqe.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace fqvqe;
using namespace fqvqe::test;
using Catch::Matchers::WithinAbs;

namespace {

Architecture arch_of(Variant v) {
    Architecture a;
    a.variant = v;
    return a;
}

std::vector<double> uniform_theta(std::size_t n, double scale, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> t(n);
    for (auto &x : t) {
        x = u(rng);
    }
    return t;
}

} // namespace

TEST_CASE("Ansatz::parameter counts", "[Ansatz]") {
    const RegisterLayout layout;
    CHECK(build_architecture(arch_of(Variant::SN), layout).num_params() == 432);
    CHECK(build_architecture(arch_of(Variant::HF), layout).num_params() == 540);
    CHECK(build_architecture(arch_of(Variant::MC), layout).num_params() == 624);
    CHECK(build_one_body_block(layout, 6).num_params() == 36);
    CHECK(build_two_body_block(layout, TwoBodyGate::RSP).num_params() == 6);
    CHECK(build_sn_block(layout, 6).num_params() == 72);
}

TEST_CASE("Ansatz::MC block order", "[Ansatz]") {
    const auto a = build_architecture(arch_of(Variant::MC), RegisterLayout{});
    REQUIRE(a.blocks.size() == 29);
    CHECK(a.blocks.front().kind == "one_body");
    CHECK(a.blocks.back().kind == "one_body");
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        CHECK(a.blocks[i].kind == (i % 2 == 0 ? "one_body" : "two_body"));
        if (i > 0) {
            CHECK(a.blocks[i].offset == a.blocks[i - 1].offset + a.blocks[i - 1].length);
        }
    }
}

TEST_CASE("Ansatz::one-body block shares parameters across registers", "[Ansatz]") {
    const RegisterLayout layout;
    const Circuit c = build_one_body_block(layout, 2);
    std::vector<int> slots0, slots1;
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::Ry) {
            (g.qubits[0] < 6 ? slots0 : slots1).push_back(g.param_slot);
        }
    }
    CHECK(slots0.size() == 12);
    CHECK(slots0 == slots1);
}

TEST_CASE("Ansatz::seed state is the spin singlet", "[Ansatz]") {
    const RegisterLayout layout;
    StateVector s(layout.total_qubits());
    s.apply(build_seed(layout));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK_THAT(s[layout.index_of(0, 0, 0, 1)].real(), WithinAbs(h, 1e-15));
    CHECK_THAT(s[layout.index_of(0, 1, 0, 0)].real(), WithinAbs(-h, 1e-15));
    CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-15));
    CHECK_THAT(swap_expectation(s, layout).value, WithinAbs(-1.0, 1e-15));
    const std::vector<std::size_t> spatial{0, 1, 2, 3, 4, 6, 7, 8, 9, 10};
    CHECK_THAT(marginal_probability(s, spatial)[0], WithinAbs(1.0, 1e-15));
}

TEST_CASE("Ansatz::HF and MC preserve antisymmetry", "[Ansatz]") {
    const RegisterLayout layout;
    std::mt19937_64 rng(21);
    for (Variant v : {Variant::HF, Variant::MC}) {
        const auto a = build_architecture(arch_of(v), layout);
        for (int trial = 0; trial < 5; ++trial) {
            const auto theta = uniform_theta(a.num_params(), std::numbers::pi, rng);
            const auto s = apply_ansatz(a, theta);
            INFO(variant_name(v));
            CHECK_THAT(swap_expectation(s, layout).value, WithinAbs(-1.0, 1e-10));
            CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-12));
        }
        const std::vector<double> zero(a.num_params(), 0.0);
        CHECK_THAT(swap_expectation(apply_ansatz(a, zero), layout).value,
                   WithinAbs(-1.0, 1e-12));
    }
}

TEST_CASE("Ansatz::Rzz two-body variant preserves antisymmetry", "[Ansatz]") {
    const RegisterLayout layout;
    Architecture arch = arch_of(Variant::MC);
    arch.two_body_gate = TwoBodyGate::RZZ;
    arch.one_body_blocks = 3;
    arch.two_body_blocks = 2;
    const auto a = build_architecture(arch, layout);
    CHECK_FALSE(a.circuit.is_real());
    std::mt19937_64 rng(22);
    const auto theta = uniform_theta(a.num_params(), 2.0, rng);
    CHECK_THAT(swap_expectation(apply_ansatz(a, theta), layout).value, WithinAbs(-1.0, 1e-10));
}

TEST_CASE("Ansatz::two-body block on a determinant keeps swap -1", "[Ansatz]") {
    const RegisterLayout layout;
    StateVector s(layout.total_qubits());
    s.apply(build_seed(layout));
    std::mt19937_64 rng(23);
    const Circuit one = build_one_body_block(layout, 6);
    s.apply(one, uniform_theta(one.num_params(), 1.0, rng));
    const Circuit two = build_two_body_block(layout, TwoBodyGate::RSP);
    s.apply(two, std::vector<double>(two.num_params(), 0.0));
    CHECK_THAT(swap_expectation(s, layout).value, WithinAbs(-1.0, 1e-12));
}

TEST_CASE("Ansatz::HF state is a single determinant", "[Ansatz]") {
    const RegisterLayout layout;
    const auto a = build_architecture(arch_of(Variant::HF), layout);
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 3; ++trial) {
        const auto s = apply_ansatz(a, uniform_theta(a.num_params(), 1.0, rng));
        const auto r = schmidt_electrons(s, layout);
        CHECK_THAT(r.coefficients(0), WithinAbs(1.0 / std::sqrt(2.0), 1e-10));
        CHECK_THAT(r.coefficients(1), WithinAbs(1.0 / std::sqrt(2.0), 1e-10));
        CHECK(r.coefficients(2) < 1e-10);
        CHECK_THAT(entanglement_entropy(r), WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("Ansatz::SN breaks exchange symmetry", "[Ansatz]") {
    const RegisterLayout layout;
    const auto a = build_architecture(arch_of(Variant::SN), layout);
    std::mt19937_64 rng(25);
    std::size_t broken = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = apply_ansatz(a, uniform_theta(a.num_params(), std::numbers::pi, rng));
        CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-12));
        if (std::abs(swap_expectation(s, layout).value) < 0.9) {
            ++broken;
        }
    }
    CHECK(broken > 0);
}

TEST_CASE("Ansatz::validation errors", "[Ansatz]") {
    const RegisterLayout layout;
    Architecture bad = arch_of(Variant::MC);
    bad.two_body_blocks = 3;
    CHECK_THROWS_AS(build_architecture(bad, layout), DomainError);
    CHECK_THROWS_AS(parse_variant("XY"), DomainError);
    CHECK(parse_variant("mc") == Variant::MC);
    CHECK(parse_two_body_gate("rzz") == TwoBodyGate::RZZ);
    const auto a = build_architecture(arch_of(Variant::HF), layout);
    const std::vector<double> short_theta(10, 0.0);
    CHECK_THROWS_AS(apply_ansatz(a, short_theta), DomainError);
    CHECK_THROWS_AS(build_seed(RegisterLayout{3, 5}), UnsupportedError);
}
