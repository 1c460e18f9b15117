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
#include "fqvqe/energy.hpp"
#include "fqvqe/error.hpp"
#include "fqvqe/hamiltonian.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace fqvqe;
using namespace fqvqe::test;
using Catch::Matchers::WithinAbs;

TEST_CASE("HamiltonianOperator::apply matches dense oracle", "[Hamiltonian]") {
    const GridSpec g = GridSpec::with_qubits(3);
    const RegisterLayout layout{2, 3};
    const auto mol = MoleculeSpec::hydrogen_pair(g, 3);
    const HamiltonianOperator op(g, mol, layout);
    CHECK(op.dimension() == 256);
    const Eigen::MatrixXd h2 = oracle_h2(g, mol);
    std::mt19937_64 rng(51);
    const auto s = random_state(layout.total_qubits(), rng);
    std::vector<cplx> out(s.size());
    op.apply<cplx>(s.amplitudes(), out);
    const std::size_t N = 8;
    double err = 0.0;
    for (std::size_t s0 = 0; s0 < 2; ++s0) {
        for (std::size_t s1 = 0; s1 < 2; ++s1) {
            Eigen::VectorXcd in(64);
            for (std::size_t a = 0; a < N; ++a) {
                for (std::size_t b = 0; b < N; ++b) {
                    in(static_cast<Eigen::Index>(a * N + b)) = s[layout.index_of(a, s0, b, s1)];
                }
            }
            const Eigen::VectorXcd expected = h2.cast<cplx>() * in;
            for (std::size_t a = 0; a < N; ++a) {
                for (std::size_t b = 0; b < N; ++b) {
                    err = std::max(err, std::abs(out[layout.index_of(a, s0, b, s1)] -
                                                 expected(static_cast<Eigen::Index>(a * N + b))));
                }
            }
        }
    }
    CHECK(err < 1e-10);
}

TEST_CASE("HamiltonianOperator::real and complex paths agree", "[Hamiltonian]") {
    const GridSpec g = GridSpec::default_experiment();
    const RegisterLayout layout;
    const HamiltonianOperator op(g, MoleculeSpec::hydrogen_pair(g, 7), layout);
    std::mt19937_64 rng(52);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> re(op.dimension());
    for (auto &x : re) {
        x = n(rng);
    }
    std::vector<cplx> ce(re.begin(), re.end());
    std::vector<double> ro(re.size());
    std::vector<cplx> co(re.size());
    op.apply<double>(re, ro);
    op.apply<cplx>(ce, co);
    double err = 0.0;
    for (std::size_t i = 0; i < re.size(); ++i) {
        err = std::max(err, std::abs(co[i] - ro[i]));
    }
    CHECK(err < 1e-10);
}

TEST_CASE("HamiltonianOperator::expectation matches total_energy", "[Hamiltonian]") {
    const GridSpec g = GridSpec::default_experiment();
    const RegisterLayout layout;
    const auto mol = MoleculeSpec::hydrogen_pair(g, 12);
    const HamiltonianOperator op(g, mol, layout);
    std::mt19937_64 rng(53);
    for (int i = 0; i < 5; ++i) {
        const auto s = random_state(12, rng);
        std::vector<cplx> scratch(s.size());
        const double e = op.expectation<cplx>(s.amplitudes(), scratch);
        CHECK_THAT(e, WithinAbs(total_energy(s, layout, g, mol).total, 1e-9));
    }
    CHECK_THAT(op.nuclear_repulsion(), WithinAbs(1.0 / (12.0 / 32.0), 1e-12));
}

TEST_CASE("HamiltonianOperator::rejects mismatched layout", "[Hamiltonian]") {
    const GridSpec g = GridSpec::with_qubits(4);
    const auto mol = MoleculeSpec::hydrogen_pair(g, 2);
    CHECK_THROWS_AS(HamiltonianOperator(g, mol, RegisterLayout{}), DomainError);
    CHECK_THROWS_AS(HamiltonianOperator(g, mol, RegisterLayout{3, 4}), UnsupportedError);
}
