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
#include "fqvqe/exact.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace fqvqe;
using namespace fqvqe::test;
using Catch::Matchers::WithinAbs;

namespace {

StateVector seed_state(const RegisterLayout &layout) {
    StateVector s(layout.total_qubits());
    s.apply(build_seed(layout));
    return s;
}

} // namespace

TEST_CASE("Analysis::swap expectation", "[Analysis]") {
    const RegisterLayout layout{2, 2};
    const auto seed = seed_state(layout);
    const auto t = swap_expectation(seed, layout);
    CHECK_THAT(t.value, WithinAbs(-1.0, 1e-15));
    CHECK_THAT(t.p0, WithinAbs(0.0, 1e-15));
    CHECK_THAT(t.p1, WithinAbs(1.0, 1e-15));

    StateVector prod(layout.total_qubits());
    CHECK_THAT(swap_expectation(prod, layout).value, WithinAbs(1.0, 1e-15));

    std::mt19937_64 rng(61);
    const auto s = random_state(layout.total_qubits(), rng);
    const auto swapped = swap_registers(s, layout);
    CHECK_THAT(swap_expectation(s, layout).value,
               WithinAbs(inner_product(s, swapped).real(), 1e-14));
    const auto twice = swap_registers(swapped, layout);
    CHECK(max_abs_diff(twice, to_vector(s)) == 0.0);
}

TEST_CASE("Analysis::singlet expectation of X1X2", "[Analysis]") {
    auto s = StateVector::from_amplitudes({0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0});
    auto t = s;
    t.apply(Gate::x(0));
    t.apply(Gate::x(1));
    CHECK_THAT(inner_product(s, t).real(), WithinAbs(-1.0, 1e-15));
}

TEST_CASE("Analysis::spin blocks", "[Analysis]") {
    const RegisterLayout layout{2, 2};
    const auto seed = seed_state(layout);
    const auto du = spin_block(seed, layout, Spin::Down, Spin::Up);
    const auto ud = spin_block(seed, layout, Spin::Up, Spin::Down);
    CHECK_THAT(du.weight, WithinAbs(0.5, 1e-15));
    CHECK_THAT(ud.weight, WithinAbs(0.5, 1e-15));
    CHECK_THAT(du.table(0, 0).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK(spin_block(seed, layout, Spin::Up, Spin::Up).weight == 0.0);
    CHECK_THROWS_AS(schmidt_spin_block(spin_block(seed, layout, Spin::Up, Spin::Up)),
                    DomainError);
}

TEST_CASE("Analysis::Schmidt decomposition reconstructs", "[Analysis]") {
    std::mt19937_64 rng(62);
    const RegisterLayout layout{2, 3};
    const auto s = random_state(layout.total_qubits(), rng);
    const auto r = schmidt_electrons(s, layout);
    const auto m = electron_coefficients(s, layout);
    CHECK((r.reconstruct() - m).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THAT(r.coefficients.squaredNorm(), WithinAbs(1.0, 1e-12));
    for (Eigen::Index i = 1; i < r.coefficients.size(); ++i) {
        CHECK(r.coefficients(i) <= r.coefficients(i - 1) + 1e-15);
    }
    const auto id = Eigen::MatrixXcd::Identity(r.left.cols(), r.left.cols());
    CHECK((r.left.adjoint() * r.left - id).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((r.right.adjoint() * r.right - id).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(r.partition == "electrons");
    CHECK_THROWS_AS(schmidt_decompose(Eigen::MatrixXcd::Zero(2, 2), "x"), DomainError);
}

TEST_CASE("Analysis::entropy values", "[Analysis]") {
    SchmidtResult r;
    r.coefficients = Eigen::VectorXd::Zero(4);
    r.coefficients(0) = 1.0;
    CHECK(entanglement_entropy(r) == 0.0);
    r.coefficients.setConstant(0.5);
    CHECK_THAT(entanglement_entropy(r), WithinAbs(2.0, 1e-14));
    const RegisterLayout layout;
    CHECK_THAT(entanglement_entropy(schmidt_electrons(seed_state(layout), layout)),
               WithinAbs(1.0, 1e-14));
}

TEST_CASE("Analysis::exact ground state orbitals", "[Analysis]") {
    const GridSpec g = GridSpec::default_experiment();
    const RegisterLayout layout;
    const auto mol = MoleculeSpec::hydrogen_pair(g, 16);
    const auto f = fermionic_ground_state(g, mol);
    const auto r = schmidt_spin_block(spin_block(f.state, layout, Spin::Down, Spin::Up));
    CHECK(r.partition == "spin_block_down_up");
    CHECK_THAT(r.coefficients(1) / r.coefficients(0), WithinAbs(0.276933, 1e-5));
    const std::size_t p1 = grid_index_of(g, mol.protons[0].position);
    const std::size_t p2 = grid_index_of(g, mol.protons[1].position);
    const auto mu0 = r.left.col(0);
    const auto mu1 = r.left.col(1);
    CHECK(mu0(static_cast<Eigen::Index>(p1)).real() * mu0(static_cast<Eigen::Index>(p2)).real() > 0.0);
    CHECK(mu1(static_cast<Eigen::Index>(p1)).real() * mu1(static_cast<Eigen::Index>(p2)).real() < 0.0);

    const auto electrons = schmidt_electrons(f.state, layout);
    CHECK_THAT(entanglement_entropy(electrons),
               WithinAbs(1.0 + entanglement_entropy(r), 1e-9));
    CHECK_THAT(entanglement_entropy(electrons), WithinAbs(1.4017, 1e-4));
}

TEST_CASE("Analysis::orbital export", "[Analysis]") {
    const GridSpec g = GridSpec::with_qubits(2);
    const RegisterLayout layout{2, 2};
    const auto seed = seed_state(layout);
    const auto r = schmidt_electrons(seed, layout);
    const auto t = orbital_export(r, g, 4);
    CHECK(t.orbitals == 2);
    CHECK(t.position.size() == 8);
    CHECK(t.spin[0] == 0);
    CHECK(t.spin[1] == 1);
    CHECK_THAT(t.position[2], WithinAbs(-0.25, 1e-15));
    CHECK(orbital_export(r, g, 1).orbitals == 1);
    CHECK_THROWS_AS(orbital_export(r, GridSpec::with_qubits(4), 4), DomainError);

    const auto block = schmidt_spin_block(spin_block(seed, layout, Spin::Down, Spin::Up));
    const auto bt = orbital_export(block, g, 4);
    CHECK(bt.orbitals == 1);
    CHECK(bt.spin[0] == -1);
}

TEST_CASE("Analysis::rejects wrong electron count", "[Analysis]") {
    StateVector s(5);
    CHECK_THROWS((void)swap_expectation(s, RegisterLayout{}));
}
