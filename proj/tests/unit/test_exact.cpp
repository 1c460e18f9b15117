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
#include "fqvqe/energy.hpp"
#include "fqvqe/error.hpp"
#include "fqvqe/exact.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace fqvqe;
using namespace fqvqe::test;
using Catch::Matchers::WithinAbs;

TEST_CASE("Exact::dft_matrix is unitary", "[Exact]") {
    const auto F = dft_matrix(8);
    CHECK((F.adjoint() * F - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(F(1, 1) - std::polar(1.0 / std::sqrt(8.0), 2 * std::numbers::pi / 8)) < 1e-15);
}

TEST_CASE("Exact::kinetic matrix matches cosine sum", "[Exact]") {
    for (std::size_t L : {2U, 3U, 5U}) {
        const GridSpec g = GridSpec::with_qubits(L);
        const Eigen::MatrixXd t = kinetic_matrix(g);
        INFO("L=" << L);
        CHECK((t - oracle_kinetic(g)).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((t - t.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(kinetic_matrix_complex(g).imag().cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("Exact::two-electron matrix matches dense oracle", "[Exact]") {
    const GridSpec g = GridSpec::with_qubits(4);
    const auto mol = MoleculeSpec::hydrogen_pair(g, 5);
    const auto h = build_spectral_hamiltonian(g, mol);
    CHECK((h.two_electron - oracle_h2(g, mol)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK_THAT(h.nuclear_repulsion, WithinAbs(oracle_nuclear(mol), 1e-12));
}

TEST_CASE("Exact::dimension cap", "[Exact]") {
    const GridSpec g = GridSpec::with_qubits(7);
    const auto mol = MoleculeSpec::hydrogen_pair(g, 4);
    CHECK_THROWS_AS(build_spectral_hamiltonian(g, mol), DomainError);
}

TEST_CASE("Exact::Hamiltonian commutes with exchange", "[Exact]") {
    const GridSpec g = GridSpec::default_experiment();
    const auto h = build_spectral_hamiltonian(g, MoleculeSpec::hydrogen_pair(g, 9));
    std::mt19937_64 rng(41);
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::VectorXd v(1024);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = n(rng);
    }
    const Eigen::VectorXd a = h.two_electron * exchange(v, 32);
    const Eigen::VectorXd b = exchange(h.two_electron * v, 32);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("Exact::sector energies at half a bohr", "[Exact]") {
    const GridSpec g = GridSpec::default_experiment();
    const auto h = build_spectral_hamiltonian(g, MoleculeSpec::hydrogen_pair(g, 16));
    const auto s = ground_sector_energies(h);
    CHECK_THAT(s.symmetric_energy, WithinAbs(-33.69829884, 1e-7));
    CHECK_THAT(s.antisymmetric_energy, WithinAbs(-26.97921898, 1e-7));
    CHECK(s.symmetric_residual < 1e-8);
    CHECK(s.antisymmetric_residual < 1e-8);
    CHECK((exchange(s.symmetric_state, 32) - s.symmetric_state).norm() < 1e-10);
    CHECK((exchange(s.antisymmetric_state, 32) + s.antisymmetric_state).norm() < 1e-10);
    CHECK_THAT(unrestricted_ground_energy(h), WithinAbs(s.symmetric_energy, 1e-8));
}

TEST_CASE("Exact::sectors agree with full diagonalization on a small grid", "[Exact]") {
    const GridSpec g = GridSpec::with_qubits(3);
    for (std::size_t m : {1U, 2U, 4U}) {
        const auto mol = MoleculeSpec::hydrogen_pair(g, m);
        const Eigen::MatrixXd dense = oracle_h2(g, mol);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
        const Eigen::VectorXd vals = solver.eigenvalues();
        const auto s = ground_sector_energies(build_spectral_hamiltonian(g, mol));
        const double enn = oracle_nuclear(mol);
        double sym = 1e300;
        double anti = 1e300;
        for (Eigen::Index i = 0; i < vals.size(); ++i) {
            const Eigen::VectorXd v = solver.eigenvectors().col(i);
            const double parity = v.dot(exchange(v, 8));
            if (parity > 0.5) {
                sym = std::min(sym, vals(i));
            } else if (parity < -0.5) {
                anti = std::min(anti, vals(i));
            }
        }
        INFO("m=" << m);
        CHECK_THAT(s.symmetric_energy, WithinAbs(sym + enn, 1e-9));
        CHECK_THAT(s.antisymmetric_energy, WithinAbs(anti + enn, 1e-9));
    }
}

TEST_CASE("Exact::fermionic ground state", "[Exact]") {
    const GridSpec g = GridSpec::default_experiment();
    const RegisterLayout layout;
    const auto mol = MoleculeSpec::hydrogen_pair(g, 16);
    const auto f = fermionic_ground_state(g, mol);
    CHECK_THAT(f.energy, WithinAbs(-33.69829884, 1e-7));
    CHECK_THAT(f.state.norm(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(swap_expectation(f.state, layout).value, WithinAbs(-1.0, 1e-12));
    CHECK(spin_block(f.state, layout, Spin::Up, Spin::Up).weight < 1e-12);
    CHECK(spin_block(f.state, layout, Spin::Down, Spin::Down).weight < 1e-12);
    CHECK_THAT(total_energy(f.state, layout, g, mol).total, WithinAbs(f.energy, 1e-9));
    const auto h = build_spectral_hamiltonian(g, mol);
    CHECK_THAT(hamiltonian_expectation(h, f.state, layout), WithinAbs(f.energy, 1e-9));
}

TEST_CASE("Exact::symmetric sector lies lowest", "[Exact]") {
    const GridSpec g = GridSpec::default_experiment();
    for (std::size_t m : {1U, 4U, 11U}) {
        const auto s = ground_sector_energies(build_spectral_hamiltonian(g, MoleculeSpec::hydrogen_pair(g, m)));
        INFO("m=" << m);
        CHECK(s.symmetric_energy < s.antisymmetric_energy);
    }
    const auto s1 = ground_sector_energies(build_spectral_hamiltonian(g, MoleculeSpec::hydrogen_pair(g, 1)));
    CHECK_THAT(s1.symmetric_energy, WithinAbs(-31.0387, 1e-4));
}

TEST_CASE("Exact::embed_spatial_spin", "[Exact]") {
    const RegisterLayout layout{2, 2};
    Eigen::VectorXcd spatial = Eigen::VectorXcd::Zero(16);
    spatial(1) = 1.0;
    const auto s = embed_spatial_spin(spatial, {0.0, 1.0, 0.0, 0.0}, layout);
    CHECK(std::abs(s[layout.index_of(0, 0, 1, 1)] - cplx{1.0, 0.0}) < 1e-15);
    CHECK_THROWS_AS(embed_spatial_spin(Eigen::VectorXcd::Zero(3), {1.0, 0.0, 0.0, 0.0}, layout),
                    DomainError);
}
