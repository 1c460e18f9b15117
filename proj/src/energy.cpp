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

#include <cmath>
#include <string>

namespace fqvqe {

void check_compatible(const StateVector &state, const RegisterLayout &layout,
                      const GridSpec &grid) {
    if (layout.spatial_qubits != grid.qubits_per_dim) {
        throw DomainError("layout spatial qubits (" +
                          std::to_string(layout.spatial_qubits) +
                          ") differ from grid L (" +
                          std::to_string(grid.qubits_per_dim) + ")");
    }
    if (state.num_qubits() != layout.total_qubits()) {
        throw DomainError("state has " + std::to_string(state.num_qubits()) +
                          " qubits, layout expects " +
                          std::to_string(layout.total_qubits()));
    }
}

double kinetic_energy(const StateVector &state, const RegisterLayout &layout,
                      const GridSpec &grid) {
    check_compatible(state, layout, grid);
    const std::size_t N = grid.num_points();
    std::vector<double> half_k2(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double k = momentum_of(grid, i);
        half_k2[i] = 0.5 * k * k;
    }
    double e = 0.0;
    for (std::size_t electron = 0; electron < layout.electrons; ++electron) {
        const auto reg = layout.spatial_register(electron);
        StateVector work = state;
        apply_qft(work, layout, reg);
        const auto p = marginal_probability(work, reg);
        for (std::size_t i = 0; i < N; ++i) {
            e += half_k2[i] * p[i];
        }
    }
    return e;
}

double electron_nuclear_energy(const StateVector &state, const RegisterLayout &layout,
                               const GridSpec &grid, const MoleculeSpec &molecule) {
    check_compatible(state, layout, grid);
    const auto v = electron_nuclear_potential(grid, molecule);
    double e = 0.0;
    for (std::size_t electron = 0; electron < layout.electrons; ++electron) {
        const auto p = marginal_probability(state, layout.spatial_register(electron));
        for (std::size_t i = 0; i < p.size(); ++i) {
            e += v[i] * p[i];
        }
    }
    return e;
}

double electron_electron_energy(const StateVector &state, const RegisterLayout &layout,
                                const GridSpec &grid) {
    check_compatible(state, layout, grid);
    if (layout.electrons != 2) {
        throw UnsupportedError("electron_electron_energy: two electrons only");
    }
    auto qubits = layout.spatial_register(0);
    const auto second = layout.spatial_register(1);
    qubits.insert(qubits.end(), second.begin(), second.end());
    const auto p = marginal_probability(state, qubits);
    const auto kernel = electron_repulsion_table(grid);
    double e = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        e += kernel[i] * p[i];
    }
    return e;
}

double nuclear_repulsion(const MoleculeSpec &molecule) {
    const auto &p = molecule.protons;
    double e = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) {
            const double d = std::abs(p[a].position - p[b].position);
            if (d == 0.0) {
                throw DomainError("nuclear_repulsion: coincident protons");
            }
            e += p[a].charge * p[b].charge / d;
        }
    }
    return e;
}

EnergyBreakdown total_energy(const StateVector &state, const RegisterLayout &layout,
                             const GridSpec &grid, const MoleculeSpec &molecule) {
    EnergyBreakdown b;
    b.kinetic = kinetic_energy(state, layout, grid);
    b.electron_nuclear = electron_nuclear_energy(state, layout, grid, molecule);
    b.electron_electron = electron_electron_energy(state, layout, grid);
    b.nuclear_nuclear = nuclear_repulsion(molecule);
    b.total = b.kinetic + b.electron_nuclear + b.electron_electron + b.nuclear_nuclear;
    return b;
}

} // namespace fqvqe
