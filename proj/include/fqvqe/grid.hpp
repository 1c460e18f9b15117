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
 * One-dimensional real-space / momentum-space grid and the soft-Coulomb
 * interaction kernel.
 */
#pragma once

#include <cstddef>
#include <vector>

namespace fqvqe {

/// Uniform periodic grid of N = 2^L points on [r_min, r_max).
struct GridSpec {
    std::size_t qubits_per_dim = 5;
    double r_min = -0.5;
    double r_max = 0.5;
    double epsilon = 1.0 / 64.0;

    /// Throws DomainError unless N >= 2, r_max > r_min and epsilon > 0.
    void validate() const;

    [[nodiscard]] std::size_t num_points() const noexcept {
        return std::size_t{1} << qubits_per_dim;
    }
    [[nodiscard]] double delta_r() const noexcept {
        return (r_max - r_min) / static_cast<double>(num_points());
    }

    /// L = 5 on [-0.5, 0.5) with epsilon = delta_r / 2.
    static GridSpec default_experiment();

    /// Same box with L qubits and epsilon = delta_r / 2.
    static GridSpec with_qubits(std::size_t L, double r_min = -0.5,
                                double r_max = 0.5);

    bool operator==(const GridSpec &) const = default;
};

struct Proton {
    double position = 0.0; ///< bohr
    double charge = 1.0;   ///< atomic number
    bool operator==(const Proton &) const = default;
};

struct MoleculeSpec {
    std::vector<Proton> protons;
    std::size_t electrons = 2;

    /// Protons must sit on grid points (within 1e-9 * delta_r).
    void validate(const GridSpec &grid) const;

    /// Two unit charges separated by `multiple` grid spacings:
    /// R1 = -round(multiple / 2) * delta_r, R2 = R1 + multiple * delta_r.
    static MoleculeSpec hydrogen_pair(const GridSpec &grid,
                                      std::size_t multiple);

    bool operator==(const MoleculeSpec &) const = default;
};

[[nodiscard]] double position_of(const GridSpec &spec, std::size_t index);

/// Signed wrap-around wavenumber 2*pi*n / (N * delta_r), with n = index for
/// index < N/2 and n = index - N otherwise.
[[nodiscard]] double momentum_of(const GridSpec &spec, std::size_t index);

/// 1 / |r - R + epsilon|, epsilon inside the absolute value, open boundary.
[[nodiscard]] double soft_coulomb(double r, double R, double epsilon);

/// Electron-electron kernel: the exchange-symmetric part of
/// soft_coulomb(r1, r2, eps), i.e. the mean of soft_coulomb(r1, r2) and
/// soft_coulomb(r2, r1). Its expectation equals the literal kernel's on every
/// state with an exchange-symmetric pair density (all fermionic and bosonic
/// states).
[[nodiscard]] double electron_repulsion(double r1, double r2, double epsilon);

/// Grid index of `position` if it lies on a grid point, otherwise throws.
[[nodiscard]] std::size_t grid_index_of(const GridSpec &spec, double position);

/// Tables over the grid shared by the energy functionals and the exact
/// oracle.
[[nodiscard]] std::vector<double>
electron_nuclear_potential(const GridSpec &grid, const MoleculeSpec &molecule);
/// Row-major N x N table of electron_repulsion(r_i, r_j).
[[nodiscard]] std::vector<double>
electron_repulsion_table(const GridSpec &grid);

} // namespace fqvqe
