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
#include "fqvqe/error.hpp"
#include "fqvqe/state_vector.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>

using namespace fqvqe;
using namespace fqvqe::test;
using Catch::Matchers::WithinAbs;

namespace {

// Register value of `idx` read from `reg`, first entry most significant.
std::size_t reg_value(std::size_t idx, std::size_t nq, const std::vector<std::size_t> &reg) {
    std::size_t v = 0;
    for (const std::size_t q : reg) {
        v = (v << 1) | ((idx >> (nq - 1 - q)) & 1U);
    }
    return v;
}

std::size_t with_reg_value(std::size_t idx, std::size_t nq, const std::vector<std::size_t> &reg,
                           std::size_t v) {
    const std::size_t L = reg.size();
    for (std::size_t b = 0; b < L; ++b) {
        const std::size_t mask = std::size_t{1} << (nq - 1 - reg[b]);
        if ((v >> (L - 1 - b)) & 1U) {
            idx |= mask;
        } else {
            idx &= ~mask;
        }
    }
    return idx;
}

Eigen::MatrixXcd dft_on_register(std::size_t nq, const std::vector<std::size_t> &reg,
                                 bool inverse) {
    const std::size_t dim = std::size_t{1} << nq;
    const std::size_t M = std::size_t{1} << reg.size();
    const double sign = inverse ? -1.0 : 1.0;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t j = reg_value(c, nq, reg);
        for (std::size_t k = 0; k < M; ++k) {
            const std::size_t r = with_reg_value(c, nq, reg, k);
            const double ph = sign * 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                              static_cast<double>(M);
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::polar(1.0 / std::sqrt(static_cast<double>(M)), ph);
        }
    }
    return out;
}

} // namespace

TEST_CASE("StateVector::construction", "[StateVector]") {
    StateVector s(3);
    CHECK(s.size() == 8);
    CHECK(s[0] == cplx{1.0, 0.0});
    CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-15));
    CHECK_THROWS_AS(StateVector(0), DomainError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(StateVector::normalized({0.0, 0.0}), DomainError);
    const auto n = StateVector::normalized({3.0, 4.0});
    CHECK_THAT(n[1].real(), WithinAbs(0.8, 1e-15));
}

TEST_CASE("StateVector::inner_product examples", "[StateVector]") {
    StateVector a(1);
    StateVector b(1);
    b.apply(Gate::x(0));
    CHECK(std::abs(inner_product(a, b)) < 1e-15);
    CHECK_THAT(inner_product(a, a).real(), WithinAbs(1.0, 1e-15));
    const auto p = StateVector::from_amplitudes({cplx{0, 1} / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    const cplx ip = inner_product(p, a);
    CHECK(std::abs(ip - cplx{0, -1} / std::sqrt(2.0)) < 1e-15);
    StateVector c(2);
    CHECK_THROWS_AS((void)inner_product(a, c), DomainError);
}

TEST_CASE("StateVector::marginal_probability", "[StateVector]") {
    std::mt19937_64 rng(2);
    const auto s = random_state(4, rng);
    const std::vector<std::size_t> q{2, 0};
    const auto p = marginal_probability(s, q);
    REQUIRE(p.size() == 4);
    std::vector<double> expected(4, 0.0);
    for (std::size_t i = 0; i < 16; ++i) {
        expected[reg_value(i, 4, q)] += std::norm(s[i]);
    }
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK_THAT(p[k], WithinAbs(expected[k], 1e-15));
    }
    CHECK_THAT(std::accumulate(p.begin(), p.end(), 0.0), WithinAbs(1.0, 1e-14));
    const std::vector<std::size_t> dup{1, 1};
    CHECK_THROWS_AS(marginal_probability(s, dup), DomainError);
}

TEST_CASE("StateVector::QFT matches a direct DFT", "[StateVector]") {
    std::mt19937_64 rng(4);
    const std::vector<std::vector<std::size_t>> regs{{0, 1, 2}, {1, 2, 3, 4}, {3, 1}, {4}};
    for (const auto &reg : regs) {
        for (bool inv : {false, true}) {
            auto s = random_state(5, rng);
            const Eigen::VectorXcd expected = dft_on_register(5, reg, inv) * to_vector(s);
            apply_qft(s, reg, inv);
            INFO("register size " << reg.size() << " inverse " << inv);
            CHECK(max_abs_diff(s, expected) < 1e-12);
        }
    }
}

TEST_CASE("StateVector::QFT of |0> is uniform", "[StateVector]") {
    StateVector s(5);
    const std::vector<std::size_t> reg{0, 1, 2, 3, 4};
    apply_qft(s, reg);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(std::abs(s[i] - cplx{1.0 / std::sqrt(32.0), 0.0}) < 1e-14);
    }
}

TEST_CASE("StateVector::QFT round trip and layout checks", "[StateVector]") {
    std::mt19937_64 rng(6);
    const RegisterLayout layout{2, 3};
    auto s = random_state(layout.total_qubits(), rng);
    const auto before = to_vector(s);
    const auto reg = layout.spatial_register(1);
    apply_qft(s, layout, reg);
    apply_qft(s, layout, reg, true);
    CHECK(max_abs_diff(s, before) < 1e-13);
    const std::vector<std::size_t> bad{layout.spin_qubit(0)};
    CHECK_THROWS_AS(apply_qft(s, layout, bad), DomainError);
    const std::vector<std::size_t> mixed{0, 4};
    CHECK_THROWS_AS(apply_qft(s, layout, mixed), DomainError);
}

TEST_CASE("StateVector::circuits preserve the norm", "[StateVector]") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> q(0, 5);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    auto s = random_state(6, rng);
    const GateKind kinds[] = {GateKind::H, GateKind::Ry, GateKind::Rzz, GateKind::RSP,
                              GateKind::CPhase, GateKind::CNOT};
    for (int i = 0; i < 200; ++i) {
        const GateKind k = kinds[static_cast<std::size_t>(i) % 6];
        const std::size_t a = q(rng);
        std::size_t b = q(rng);
        while (b == a) {
            b = q(rng);
        }
        s.apply(Gate{k, {a, gate_arity(k) == 1 ? a : b}}, ang(rng));
    }
    CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("RegisterLayout::index and registers", "[StateVector]") {
    const RegisterLayout layout;
    CHECK(layout.total_qubits() == 12);
    CHECK(layout.spin_qubit(0) == 5);
    CHECK(layout.spin_qubit(1) == 11);
    CHECK(layout.index_of(0, 1, 0, 0) == 64);
    CHECK(layout.index_of(31, 1, 31, 1) == 4095);
    CHECK(layout.spatial_register(1) == std::vector<std::size_t>{6, 7, 8, 9, 10});
    StateVector s(12);
    s.apply(Gate::x(5));
    CHECK(std::abs(s[layout.index_of(0, 1, 0, 0)]) == 1.0);
}
