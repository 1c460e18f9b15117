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
#include "fqvqe/hamiltonian.hpp"

#include "fqvqe/energy.hpp"
#include "fqvqe/error.hpp"
#include "fqvqe/exact.hpp"
#include "fqvqe/simd/kernels.hpp"

#include <type_traits>

namespace fqvqe {

HamiltonianOperator::HamiltonianOperator(const GridSpec &grid,
                                         const MoleculeSpec &molecule,
                                         const RegisterLayout &layout)
    : layout_(layout) {
    grid.validate();
    molecule.validate(grid);
    if (layout.electrons != 2) {
        throw UnsupportedError("HamiltonianOperator: two electrons only");
    }
    if (layout.spatial_qubits != grid.qubits_per_dim) {
        throw DomainError("HamiltonianOperator: layout and grid disagree on L");
    }
    kinetic_ = kinetic_matrix(grid);
    kinetic_complex_ = kinetic_.cast<std::complex<double>>();
    nuclear_ = fqvqe::nuclear_repulsion(molecule);
    const auto ven = electron_nuclear_potential(grid, molecule);
    const auto vee = electron_repulsion_table(grid);
    const std::size_t N = grid.num_points();
    diagonal_.assign(std::size_t{1} << layout.total_qubits(), 0.0);
    for (std::size_t x0 = 0; x0 < N; ++x0) {
        for (std::size_t x1 = 0; x1 < N; ++x1) {
            const double v = ven[x0] + ven[x1] + vee[x0 * N + x1];
            for (std::size_t s0 = 0; s0 < 2; ++s0) {
                for (std::size_t s1 = 0; s1 < 2; ++s1) {
                    diagonal_[layout.index_of(x0, s0, x1, s1)] = v;
                }
            }
        }
    }
}

template <class T>
void HamiltonianOperator::apply(std::span<const T> in, std::span<T> out) const {
    using RowMat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const auto n = static_cast<Eigen::Index>(layout_.grid_points());
    const auto reg = static_cast<Eigen::Index>(layout_.register_dim());
    const auto &k = simd::active_kernels();
    std::fill(out.begin(), out.end(), T{});
    if constexpr (std::is_same_v<T, double>) {
        k.diag_mul_add_real(out.data(), diagonal_.data(), in.data(), in.size());
    } else {
        k.diag_mul_add_complex(out.data(), diagonal_.data(), in.data(), in.size());
    }
    const auto &tk = [&]() -> const auto & {
        if constexpr (std::is_same_v<T, double>) {
            return kinetic_;
        } else {
            return kinetic_complex_;
        }
    }();
    {
        Eigen::Map<const RowMat> src(in.data(), n, 2 * reg);
        Eigen::Map<RowMat> dst(out.data(), n, 2 * reg);
        dst.noalias() += tk * src;
    }
    for (Eigen::Index o = 0; o < 2 * n; ++o) {
        Eigen::Map<const RowMat> src(in.data() + o * reg, n, 2);
        Eigen::Map<RowMat> dst(out.data() + o * reg, n, 2);
        dst.noalias() += tk * src;
    }
}

template <class T>
double HamiltonianOperator::expectation(std::span<const T> psi,
                                        std::span<T> scratch) const {
    apply<T>(psi, scratch);
    const auto &k = simd::active_kernels();
    if constexpr (std::is_same_v<T, double>) {
        return k.dot_real(psi.data(), scratch.data(), psi.size()) + nuclear_;
    } else {
        return k.dot_complex(psi.data(), scratch.data(), psi.size()).real() + nuclear_;
    }
}

template void HamiltonianOperator::apply<double>(std::span<const double>,
                                                 std::span<double>) const;
template void HamiltonianOperator::apply<std::complex<double>>(
    std::span<const std::complex<double>>, std::span<std::complex<double>>) const;
template double HamiltonianOperator::expectation<double>(std::span<const double>,
                                                         std::span<double>) const;
template double HamiltonianOperator::expectation<std::complex<double>>(
    std::span<const std::complex<double>>, std::span<std::complex<double>>) const;

} // namespace fqvqe
