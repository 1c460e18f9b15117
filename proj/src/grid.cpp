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
#include "fqvqe/grid.hpp"

#include "fqvqe/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fqvqe {

void GridSpec::validate() const {
    if (qubits_per_dim < 1 || qubits_per_dim > 12) {
        throw DomainError("grid: qubits_per_dim must be in [1, 12], got " +
                          std::to_string(qubits_per_dim));
    }
    if (!(r_max > r_min) || !std::isfinite(r_min) || !std::isfinite(r_max)) {
        throw DomainError("grid: require finite r_min < r_max");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw DomainError("grid: epsilon must be positive");
    }
}

GridSpec GridSpec::default_experiment() { return with_qubits(5); }

GridSpec GridSpec::with_qubits(std::size_t L, double r_min, double r_max) {
    GridSpec g;
    g.qubits_per_dim = L;
    g.r_min = r_min;
    g.r_max = r_max;
    g.epsilon = g.delta_r() / 2.0;
    return g;
}

std::size_t grid_index_of(const GridSpec &spec, double position) {
    const double dr = spec.delta_r();
    const double x = (position - spec.r_min) / dr;
    const double j = std::round(x);
    if (std::abs(x - j) > 1e-9 || j < 0.0 ||
        j >= static_cast<double>(spec.num_points())) {
        throw DomainError("position " + std::to_string(position) +
                          " is not a grid point");
    }
    return static_cast<std::size_t>(j);
}

void MoleculeSpec::validate(const GridSpec &grid) const {
    if (electrons < 1) {
        throw DomainError("molecule: at least one electron required");
    }
    for (const auto &p : protons) {
        if (!std::isfinite(p.charge) || p.charge < 0.0) {
            throw DomainError("molecule: charges must be finite and >= 0");
        }
        (void)grid_index_of(grid, p.position);
    }
}

MoleculeSpec MoleculeSpec::hydrogen_pair(const GridSpec &grid,
                                         std::size_t multiple) {
    if (multiple == 0) {
        throw DomainError("hydrogen_pair: separation must be >= 1 grid step");
    }
    const double dr = grid.delta_r();
    const double left = -std::round(static_cast<double>(multiple) / 2.0);
    MoleculeSpec m;
    m.protons = {{left * dr, 1.0},
                 {(left + static_cast<double>(multiple)) * dr, 1.0}};
    m.electrons = 2;
    m.validate(grid);
    return m;
}

double position_of(const GridSpec &spec, std::size_t index) {
    if (index >= spec.num_points()) {
        throw DomainError("position_of: index " + std::to_string(index) +
                          " out of range");
    }
    return spec.r_min + static_cast<double>(index) * spec.delta_r();
}

double momentum_of(const GridSpec &spec, std::size_t index) {
    const std::size_t N = spec.num_points();
    if (index >= N) {
        throw DomainError("momentum_of: index " + std::to_string(index) +
                          " out of range");
    }
    const double n = index < N / 2
                         ? static_cast<double>(index)
                         : static_cast<double>(index) - static_cast<double>(N);
    return 2.0 * std::numbers::pi * n /
           (static_cast<double>(N) * spec.delta_r());
}

double soft_coulomb(double r, double R, double epsilon) {
    const double d = std::abs(r - R + epsilon);
    if (d == 0.0) {
        throw DomainError("soft_coulomb: zero denominator");
    }
    return 1.0 / d;
}

double electron_repulsion(double r1, double r2, double epsilon) {
    return 0.5 * (soft_coulomb(r1, r2, epsilon) + soft_coulomb(r2, r1, epsilon));
}

std::vector<double> electron_nuclear_potential(const GridSpec &grid,
                                               const MoleculeSpec &molecule) {
    const std::size_t N = grid.num_points();
    std::vector<double> v(N, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
        const double r = position_of(grid, i);
        for (const auto &p : molecule.protons) {
            if (p.charge != 0.0) {
                v[i] -= p.charge * soft_coulomb(r, p.position, grid.epsilon);
            }
        }
    }
    return v;
}

std::vector<double> electron_repulsion_table(const GridSpec &grid) {
    const std::size_t N = grid.num_points();
    std::vector<double> t(N * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            t[i * N + j] = electron_repulsion(position_of(grid, i),
                                              position_of(grid, j), grid.epsilon);
        }
    }
    return t;
}

} // namespace fqvqe
