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
 * Matrix-free two-electron Hamiltonian acting on full register amplitudes.
 */
#pragma once

#include "fqvqe/grid.hpp"
#include "fqvqe/layout.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace fqvqe {

/// H = T (x) 1 + 1 (x) T + V_en(r1) + V_en(r2) + V_ee(r1, r2) + E_nn on the
/// register layout, identity on spin. T is the spectral kinetic matrix.
class HamiltonianOperator {
  public:
    HamiltonianOperator(const GridSpec &grid, const MoleculeSpec &molecule,
                        const RegisterLayout &layout);

    /// out = (H - E_nn) in. `in` and `out` must not alias.
    template <class T> void apply(std::span<const T> in, std::span<T> out) const;

    /// <psi|H|psi> including E_nn; `scratch` receives (H - E_nn) psi.
    template <class T>
    double expectation(std::span<const T> psi, std::span<T> scratch) const;

    [[nodiscard]] double nuclear_repulsion() const noexcept { return nuclear_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return diagonal_.size(); }
    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }

  private:
    RegisterLayout layout_;
    Eigen::MatrixXd kinetic_;
    Eigen::MatrixXcd kinetic_complex_;
    std::vector<double> diagonal_;
    double nuclear_ = 0.0;
};

} // namespace fqvqe
