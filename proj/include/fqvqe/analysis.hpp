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
 * Exchange-symmetry measurement, spin blocks, Schmidt decomposition and
 * entanglement entropy of two-electron register states.
 */
#pragma once

#include "fqvqe/grid.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/state_vector.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace fqvqe {

/// <psi|SWAP_12|psi> with SWAP_12 exchanging the full electron registers, and
/// the Hadamard-test outcome probabilities p0 = (1 + v)/2, p1 = (1 - v)/2.
struct SwapTest {
    double value = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
};

[[nodiscard]] SwapTest swap_expectation(const StateVector &state,
                                        const RegisterLayout &layout);

/// Register exchange applied to the amplitudes.
[[nodiscard]] StateVector swap_registers(const StateVector &state,
                                         const RegisterLayout &layout);

enum class Spin : std::size_t { Down = 0, Up = 1 };

/// psi(r1 s1, r2 s2) as an N x N table (rows r1, columns r2) and its squared
/// norm.
struct SpinBlock {
    Spin s1 = Spin::Down;
    Spin s2 = Spin::Up;
    Eigen::MatrixXcd table;
    double weight = 0.0;
};

[[nodiscard]] SpinBlock spin_block(const StateVector &state,
                                   const RegisterLayout &layout, Spin s1, Spin s2);

/// psi as a (register 0) x (register 1) coefficient matrix, 2^(L+1) square.
[[nodiscard]] Eigen::MatrixXcd electron_coefficients(const StateVector &state,
                                                     const RegisterLayout &layout);

/// M = sum_i lambda_i mu_i chi_i^T with orthonormal columns mu_i (left) and
/// chi_i (right); lambda non-increasing.
struct SchmidtResult {
    Eigen::VectorXd coefficients;
    Eigen::MatrixXcd left;
    Eigen::MatrixXcd right;
    std::string partition;

    [[nodiscard]] Eigen::MatrixXcd reconstruct() const;
};

/// SVD of `coefficients` normalized to unit Frobenius norm. Throws
/// DomainError on a zero matrix. Each left vector's first component with
/// magnitude above 1e-12 is made real-positive (the phase moves to the right
/// vector); equal coefficients keep the order of the left vectors compared
/// lexicographically by magnitude.
[[nodiscard]] SchmidtResult schmidt_decompose(const Eigen::MatrixXcd &coefficients,
                                              std::string partition);

/// Electron 0 vs electron 1 over full registers (space and spin).
[[nodiscard]] SchmidtResult schmidt_electrons(const StateVector &state,
                                              const RegisterLayout &layout);
/// Spatial Schmidt decomposition of one renormalized spin block.
[[nodiscard]] SchmidtResult schmidt_spin_block(const SpinBlock &block);

/// -sum lambda^2 log2 lambda^2, dropping lambda^2 < 1e-14.
[[nodiscard]] double entanglement_entropy(const SchmidtResult &result);

/// Flattened Schmidt orbitals for plotting. One row per basis index of the
/// analyzed partition; for register partitions (dimension 2N) the row carries
/// spin, for spatial partitions (dimension N) spin is -1.
struct OrbitalTable {
    std::size_t orbitals = 0;
    std::vector<double> position;
    std::vector<int> spin;
    /// [orbital][row]
    std::vector<std::vector<cplx>> left;
    std::vector<std::vector<cplx>> right;
    std::vector<double> coefficients;
};

/// Up to `max_orbitals` pairs with lambda above 1e-10.
[[nodiscard]] OrbitalTable orbital_export(const SchmidtResult &result,
                                          const GridSpec &grid,
                                          std::size_t max_orbitals = 4);

} // namespace fqvqe
