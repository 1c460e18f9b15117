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
#include "fqvqe/exact.hpp"

#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace fqvqe;
using namespace fqvqe::test;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Electron 0 in spatial state a (spin down), electron 1 in b (spin up).
StateVector product_state(const RegisterLayout &layout, const std::vector<cplx> &a,
                          const std::vector<cplx> &b) {
    std::vector<cplx> amps(std::size_t{1} << layout.total_qubits(), 0.0);
    for (std::size_t x0 = 0; x0 < a.size(); ++x0) {
        for (std::size_t x1 = 0; x1 < b.size(); ++x1) {
            amps[layout.index_of(x0, 0, x1, 1)] = a[x0] * b[x1];
        }
    }
    return StateVector::normalized(std::move(amps));
}

std::vector<cplx> delta(std::size_t N, std::size_t j) {
    std::vector<cplx> v(N, 0.0);
    v[j] = 1.0;
    return v;
}

} // namespace

TEST_CASE("Energy::kinetic examples", "[Energy]") {
    const GridSpec grid = GridSpec::default_experiment();
    const RegisterLayout layout;
    const std::size_t N = grid.num_points();

    SECTION("uniform spatial state") {
        const std::vector<cplx> u(N, 1.0);
        CHECK_THAT(kinetic_energy(product_state(layout, u, u), layout, grid), WithinAbs(0.0, 1e-10));
    }
    SECTION("deltas have a flat momentum distribution") {
        double sum = 0.0;
        for (long n = -16; n < 16; ++n) {
            const double k = 2.0 * std::numbers::pi * static_cast<double>(n);
            sum += 0.5 * k * k;
        }
        const auto s = product_state(layout, delta(N, 0), delta(N, 0));
        CHECK_THAT(kinetic_energy(s, layout, grid), WithinRel(2.0 * sum / 32.0, 1e-12));
    }
    SECTION("two-point superposition matches the spectral matrix") {
        std::vector<cplx> a(N, 0.0);
        a[0] = a[1] = 1.0 / std::sqrt(2.0);
        const auto s = product_state(layout, a, delta(N, 7));
        const Eigen::MatrixXd t = oracle_kinetic(grid);
        const double expected = 0.5 * (t(0, 0) + t(1, 1) + 2 * t(0, 1)) + t(7, 7);
        CHECK_THAT(kinetic_energy(s, layout, grid), WithinAbs(expected, 1e-10));
    }
}

TEST_CASE("Energy::electron-nuclear examples", "[Energy]") {
    const GridSpec grid = GridSpec::default_experiment();
    const RegisterLayout layout;
    const std::size_t N = grid.num_points();
    SECTION("both electrons on the proton") {
        MoleculeSpec m;
        m.protons = {{position_of(grid, 8), 1.0}};
        const auto s = product_state(layout, delta(N, 8), delta(N, 8));
        CHECK_THAT(electron_nuclear_energy(s, layout, grid, m), WithinAbs(-128.0, 1e-10));
    }
    SECTION("uniform state") {
        MoleculeSpec m;
        m.protons = {{0.0, 1.0}};
        const std::vector<cplx> u(N, 1.0);
        double sum = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            sum += 1.0 / std::abs(oracle_position(grid, j) + grid.epsilon);
        }
        CHECK_THAT(electron_nuclear_energy(product_state(layout, u, u), layout, grid, m),
                   WithinRel(-2.0 * sum / 32.0, 1e-12));
    }
    SECTION("zero charge") {
        MoleculeSpec m;
        m.protons = {{0.0, 0.0}};
        const std::vector<cplx> u(N, 1.0);
        CHECK(electron_nuclear_energy(product_state(layout, u, u), layout, grid, m) == 0.0);
    }
}

TEST_CASE("Energy::electron-electron examples", "[Energy]") {
    const GridSpec grid = GridSpec::default_experiment();
    const RegisterLayout layout;
    const std::size_t N = grid.num_points();
    CHECK_THAT(electron_electron_energy(product_state(layout, delta(N, 5), delta(N, 5)), layout, grid),
               WithinAbs(64.0, 1e-10));
    const double eps = grid.epsilon;
    const double half = 0.5 * (1.0 / (0.5 + eps) + 1.0 / (0.5 - eps));
    CHECK_THAT(electron_electron_energy(product_state(layout, delta(N, 4), delta(N, 20)), layout, grid),
               WithinAbs(half, 1e-12));
    CHECK_THAT(electron_electron_energy(product_state(layout, delta(N, 20), delta(N, 4)), layout, grid),
               WithinAbs(half, 1e-12));
}

TEST_CASE("Energy::antisymmetric pair repels less than the product", "[Energy]") {
    const GridSpec grid = GridSpec::with_qubits(2);
    const RegisterLayout layout{2, 2};
    std::mt19937_64 rng(31);
    std::normal_distribution<double> n(0.0, 1.0);
    const std::size_t N = 4;
    std::vector<cplx> a(N), b(N);
    for (std::size_t i = 0; i < N; ++i) {
        a[i] = n(rng);
        b[i] = n(rng);
    }
    std::vector<cplx> anti(std::size_t{1} << layout.total_qubits(), 0.0);
    for (std::size_t x0 = 0; x0 < N; ++x0) {
        for (std::size_t x1 = 0; x1 < N; ++x1) {
            anti[layout.index_of(x0, 0, x1, 0)] = a[x0] * b[x1] - b[x0] * a[x1];
        }
    }
    const auto s = StateVector::normalized(anti);
    double diag = 0.0;
    for (std::size_t x = 0; x < N; ++x) {
        diag += std::norm(s[layout.index_of(x, 0, x, 0)]);
    }
    REQUIRE(diag < 1e-30);
    const auto p0 = marginal_probability(s, layout.spatial_register(0));
    const auto p1 = marginal_probability(s, layout.spatial_register(1));
    double product = 0.0;
    for (std::size_t x0 = 0; x0 < N; ++x0) {
        for (std::size_t x1 = 0; x1 < N; ++x1) {
            product += p0[x0] * p1[x1] *
                       electron_repulsion(position_of(grid, x0), position_of(grid, x1), grid.epsilon);
        }
    }
    CHECK(electron_electron_energy(s, layout, grid) < product);
}

TEST_CASE("Energy::nuclear repulsion", "[Energy]") {
    MoleculeSpec m;
    m.protons = {{-0.25, 1.0}, {0.25, 1.0}};
    CHECK_THAT(nuclear_repulsion(m), WithinAbs(2.0, 1e-15));
    m.protons = {{0.0, 1.0}, {0.03125, 1.0}};
    CHECK_THAT(nuclear_repulsion(m), WithinAbs(32.0, 1e-12));
    m.protons = {{0.1, 1.0}, {0.1, 1.0}};
    CHECK_THROWS_AS(nuclear_repulsion(m), DomainError);
}

TEST_CASE("Energy::total matches the dense oracle on random states", "[Energy]") {
    const GridSpec grid = GridSpec::default_experiment();
    const RegisterLayout layout;
    const auto mol = MoleculeSpec::hydrogen_pair(grid, 16);
    const Eigen::MatrixXd h2 = oracle_h2(grid, mol);
    const double enn = oracle_nuclear(mol);
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        const auto s = random_state(layout.total_qubits(), rng);
        const auto e = total_energy(s, layout, grid, mol);
        CHECK_THAT(e.total, WithinAbs(oracle_energy(h2, enn, s, layout), 1e-9));
        CHECK_THAT(e.total, WithinAbs(e.kinetic + e.electron_nuclear + e.electron_electron +
                                          e.nuclear_nuclear, 1e-12));
    }
}

TEST_CASE("Energy::incompatible inputs", "[Energy]") {
    const GridSpec grid = GridSpec::with_qubits(4);
    const RegisterLayout layout;
    StateVector s(layout.total_qubits());
    CHECK_THROWS_AS(kinetic_energy(s, layout, grid), DomainError);
    StateVector small(4);
    CHECK_THROWS_AS(kinetic_energy(small, layout, GridSpec::default_experiment()), DomainError);
}
