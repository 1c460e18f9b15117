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
 * Energy expectation of a first-quantized two-electron state from exact
 * marginal probabilities, the way a noiseless measurement would see them:
 * kinetic energy from the momentum distribution after a register QFT,
 * Coulomb terms from real-space distributions.
 */
#pragma once

#include "fqvqe/grid.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/state_vector.hpp"

namespace fqvqe {

/// Energy components in hartree.
struct EnergyBreakdown {
    double kinetic = 0.0;
    double electron_nuclear = 0.0;
    double electron_electron = 0.0;
    double nuclear_nuclear = 0.0;
    double total = 0.0;
};

/// sum_i sum_k (k^2 / 2) p_i(k), p_i the momentum distribution of electron i.
[[nodiscard]] double kinetic_energy(const StateVector &state,
                                    const RegisterLayout &layout,
                                    const GridSpec &grid);

/// -sum_i sum_p Z_p sum_r soft_coulomb(r, R_p) p_i(r).
[[nodiscard]] double electron_nuclear_energy(const StateVector &state,
                                             const RegisterLayout &layout,
                                             const GridSpec &grid,
                                             const MoleculeSpec &molecule);

/// sum_{r1,r2} electron_repulsion(r1, r2) p_12(r1, r2), spin traced out.
/// Two electrons only.
[[nodiscard]] double electron_electron_energy(const StateVector &state,
                                              const RegisterLayout &layout,
                                              const GridSpec &grid);

/// sum_{p<q} Z_p Z_q / |R_p - R_q|; throws DomainError on coincident protons.
[[nodiscard]] double nuclear_repulsion(const MoleculeSpec &molecule);

[[nodiscard]] EnergyBreakdown total_energy(const StateVector &state,
                                           const RegisterLayout &layout,
                                           const GridSpec &grid,
                                           const MoleculeSpec &molecule);

/// Throws DomainError unless state, layout and grid agree on sizes.
void check_compatible(const StateVector &state, const RegisterLayout &layout,
                      const GridSpec &grid);

} // namespace fqvqe
