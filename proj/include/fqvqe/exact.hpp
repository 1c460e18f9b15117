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
/**
 * @file
 * Exact diagonalization of the discretized two-electron Hamiltonian.
 *
 * Works in the N^2-dimensional spatial space (index r1 * N + r2) and attaches
 * spin analytically. The kinetic operator is the spectral one,
 * F^dagger diag(k^2/2) F with F the unitary DFT in the same convention as the
 * simulator's QFT.
 */
#pragma once

#include "fqvqe/grid.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/state_vector.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace fqvqe {

/// Unitary DFT matrix F_{kj} = N^{-1/2} exp(+2 pi i j k / N).
[[nodiscard]] Eigen::MatrixXcd dft_matrix(std::size_t N);

/// F^dagger diag(k^2 / 2) F as computed (complex).
[[nodiscard]] Eigen::MatrixXcd kinetic_matrix_complex(const GridSpec &grid);
/// Real part of kinetic_matrix_complex; throws NumericalError if the
/// imaginary part exceeds 1e-10.
[[nodiscard]] Eigen::MatrixXd kinetic_matrix(const GridSpec &grid);

struct SpectralHamiltonian {
    GridSpec grid;
    Eigen::MatrixXd kinetic;          ///< N x N
    Eigen::VectorXd electron_nuclear; ///< N
    Eigen::MatrixXd electron_electron; ///< N x N, (r1, r2)
    double nuclear_repulsion = 0.0;
    /// N^2 x N^2 two-electron spatial matrix without the nuclear term.
    Eigen::MatrixXd two_electron;

    [[nodiscard]] std::size_t grid_points() const noexcept {
        return static_cast<std::size_t>(kinetic.rows());
    }
};

/// Default cap on the two-electron dimension N^2.
inline constexpr std::size_t kMaxExactDimension = 4096;

[[nodiscard]] SpectralHamiltonian
build_spectral_hamiltonian(const GridSpec &grid, const MoleculeSpec &molecule,
                           std::size_t max_dimension = kMaxExactDimension);

/// Permutation (r1, r2) -> (r2, r1) applied to an N^2 spatial vector.
[[nodiscard]] Eigen::VectorXd exchange(const Eigen::VectorXd &v, std::size_t N);

struct SectorGround {
    double symmetric_energy = 0.0;     ///< includes nuclear repulsion
    double antisymmetric_energy = 0.0; ///< includes nuclear repulsion
    Eigen::VectorXd symmetric_state;   ///< N^2, unit norm
    Eigen::VectorXd antisymmetric_state;
    double symmetric_residual = 0.0;   ///< ||H v - E v||
    double antisymmetric_residual = 0.0;
};

/// Lowest eigenpair of H restricted to the exchange-symmetric and
/// exchange-antisymmetric spatial sectors. Eigenvectors are signed so that
/// their largest-magnitude component is positive.
[[nodiscard]] SectorGround ground_sector_energies(const SpectralHamiltonian &h);

/// Lowest eigenvalue of the unrestricted two-electron matrix plus nuclear
/// repulsion (dense; for cross-checks on small grids).
[[nodiscard]] double unrestricted_ground_energy(const SpectralHamiltonian &h);

struct FermionicGround {
    double energy = 0.0;
    StateVector state;
    SectorGround sectors;
};

/// Symmetric spatial ground function times the spin singlet
/// (|down up> - |up down>) / sqrt(2), embedded in the register layout.
[[nodiscard]] FermionicGround fermionic_ground_state(const GridSpec &grid,
                                                     const MoleculeSpec &molecule);

/// Embeds a spatial two-electron function times a two-spin function
/// (indexed s1 * 2 + s2) into the register layout.
[[nodiscard]] StateVector embed_spatial_spin(const Eigen::VectorXcd &spatial,
                                             const std::array<cplx, 4> &spin,
                                             const RegisterLayout &layout);

/// sum over spin blocks of psi_s^dagger H psi_s, plus nuclear repulsion.
[[nodiscard]] double hamiltonian_expectation(const SpectralHamiltonian &h,
                                             const StateVector &state,
                                             const RegisterLayout &layout);

} // namespace fqvqe
