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
#include "fqvqe/exact.hpp"

#include "fqvqe/energy.hpp"
#include "fqvqe/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <string>

namespace fqvqe {
namespace {

// Columns form an orthonormal basis of the exchange-symmetric (sign = +1) or
// antisymmetric (sign = -1) subspace; each column has at most two nonzeros,
// so it is stored as index/weight pairs.
struct SectorBasis {
    std::vector<std::array<std::size_t, 2>> index;
    std::vector<std::array<double, 2>> weight;
};

SectorBasis sector_basis(std::size_t N, int sign) {
    SectorBasis b;
    const double w = 1.0 / std::sqrt(2.0);
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t c = a; c < N; ++c) {
            if (a == c) {
                if (sign > 0) {
                    b.index.push_back({a * N + a, a * N + a});
                    b.weight.push_back({1.0, 0.0});
                }
            } else {
                b.index.push_back({a * N + c, c * N + a});
                b.weight.push_back({w, sign * w});
            }
        }
    }
    return b;
}

struct Eigenpair {
    double value;
    Eigen::VectorXd vector;
    double residual;
};

Eigenpair sector_ground(const Eigen::MatrixXd &H, const SectorBasis &b) {
    const auto n = static_cast<Eigen::Index>(b.index.size());
    const auto dim = H.rows();
    Eigen::MatrixXd HB(dim, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto &ix = b.index[static_cast<std::size_t>(j)];
        const auto &wt = b.weight[static_cast<std::size_t>(j)];
        HB.col(j) = wt[0] * H.col(static_cast<Eigen::Index>(ix[0]));
        if (wt[1] != 0.0) {
            HB.col(j) += wt[1] * H.col(static_cast<Eigen::Index>(ix[1]));
        }
    }
    Eigen::MatrixXd Hs(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto &ix = b.index[static_cast<std::size_t>(i)];
        const auto &wt = b.weight[static_cast<std::size_t>(i)];
        Hs.row(i) = wt[0] * HB.row(static_cast<Eigen::Index>(ix[0]));
        if (wt[1] != 0.0) {
            Hs.row(i) += wt[1] * HB.row(static_cast<Eigen::Index>(ix[1]));
        }
    }
    Hs = 0.5 * (Hs + Hs.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Hs);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("sector eigensolver did not converge");
    }
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    const Eigen::VectorXd c = solver.eigenvectors().col(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto &ix = b.index[static_cast<std::size_t>(j)];
        const auto &wt = b.weight[static_cast<std::size_t>(j)];
        v(static_cast<Eigen::Index>(ix[0])) += wt[0] * c(j);
        if (wt[1] != 0.0) {
            v(static_cast<Eigen::Index>(ix[1])) += wt[1] * c(j);
        }
    }
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) {
        v = -v;
    }
    const double e = solver.eigenvalues()(0);
    const double residual = (H * v - e * v).norm();
    if (residual > 1e-8) {
        throw NumericalError("sector eigenpair residual " + std::to_string(residual));
    }
    return {e, v, residual};
}

} // namespace

Eigen::MatrixXcd dft_matrix(std::size_t N) {
    Eigen::MatrixXcd F(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t j = 0; j < N; ++j) {
            const double phase = 2.0 * std::numbers::pi *
                                 static_cast<double>((j * k) % N) /
                                 static_cast<double>(N);
            F(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
                scale * cplx{std::cos(phase), std::sin(phase)};
        }
    }
    return F;
}

Eigen::MatrixXcd kinetic_matrix_complex(const GridSpec &grid) {
    grid.validate();
    const std::size_t N = grid.num_points();
    const Eigen::MatrixXcd F = dft_matrix(N);
    Eigen::VectorXd half_k2(static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i) {
        const double k = momentum_of(grid, i);
        half_k2(static_cast<Eigen::Index>(i)) = 0.5 * k * k;
    }
    return F.adjoint() * half_k2.asDiagonal() * F;
}

Eigen::MatrixXd kinetic_matrix(const GridSpec &grid) {
    const Eigen::MatrixXcd T = kinetic_matrix_complex(grid);
    const double imag = T.imag().cwiseAbs().maxCoeff();
    if (imag > 1e-10 * std::max(1.0, T.real().cwiseAbs().maxCoeff())) {
        throw NumericalError("kinetic matrix is not real");
    }
    Eigen::MatrixXd R = T.real();
    return 0.5 * (R + R.transpose());
}

SpectralHamiltonian build_spectral_hamiltonian(const GridSpec &grid,
                                               const MoleculeSpec &molecule,
                                               std::size_t max_dimension) {
    grid.validate();
    molecule.validate(grid);
    const std::size_t N = grid.num_points();
    if (N * N > max_dimension) {
        throw DomainError("exact: two-electron dimension " + std::to_string(N * N) +
                          " exceeds cap " + std::to_string(max_dimension));
    }
    const auto n = static_cast<Eigen::Index>(N);
    SpectralHamiltonian h;
    h.grid = grid;
    h.kinetic = kinetic_matrix(grid);
    const auto ven = electron_nuclear_potential(grid, molecule);
    h.electron_nuclear = Eigen::Map<const Eigen::VectorXd>(ven.data(), n);
    const auto vee = electron_repulsion_table(grid);
    h.electron_electron =
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>(vee.data(), n, n);
    h.nuclear_repulsion = nuclear_repulsion(molecule);

    h.two_electron = Eigen::MatrixXd::Zero(n * n, n * n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            h.two_electron.block(a * n, b * n, n, n).diagonal().array() +=
                h.kinetic(a, b);
        }
        h.two_electron.block(a * n, a * n, n, n) += h.kinetic;
        for (Eigen::Index c = 0; c < n; ++c) {
            h.two_electron(a * n + c, a * n + c) +=
                h.electron_nuclear(a) + h.electron_nuclear(c) + h.electron_electron(a, c);
        }
    }
    return h;
}

Eigen::VectorXd exchange(const Eigen::VectorXd &v, std::size_t N) {
    Eigen::VectorXd out(v.size());
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            out(static_cast<Eigen::Index>(a * N + b)) = v(static_cast<Eigen::Index>(b * N + a));
        }
    }
    return out;
}

SectorGround ground_sector_energies(const SpectralHamiltonian &h) {
    const std::size_t N = h.grid_points();
    const auto sym = sector_ground(h.two_electron, sector_basis(N, +1));
    const auto anti = sector_ground(h.two_electron, sector_basis(N, -1));
    SectorGround g;
    g.symmetric_energy = sym.value + h.nuclear_repulsion;
    g.antisymmetric_energy = anti.value + h.nuclear_repulsion;
    g.symmetric_state = sym.vector;
    g.antisymmetric_state = anti.vector;
    g.symmetric_residual = sym.residual;
    g.antisymmetric_residual = anti.residual;
    return g;
}

double unrestricted_ground_energy(const SpectralHamiltonian &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.two_electron,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigensolver did not converge");
    }
    return solver.eigenvalues()(0) + h.nuclear_repulsion;
}

StateVector embed_spatial_spin(const Eigen::VectorXcd &spatial,
                               const std::array<cplx, 4> &spin,
                               const RegisterLayout &layout) {
    if (layout.electrons != 2) {
        throw UnsupportedError("embed_spatial_spin: two electrons only");
    }
    const std::size_t N = layout.grid_points();
    if (static_cast<std::size_t>(spatial.size()) != N * N) {
        throw DomainError("embed_spatial_spin: spatial vector has wrong size");
    }
    std::vector<cplx> amps(std::size_t{1} << layout.total_qubits(), cplx{});
    for (std::size_t x0 = 0; x0 < N; ++x0) {
        for (std::size_t x1 = 0; x1 < N; ++x1) {
            const cplx f = spatial(static_cast<Eigen::Index>(x0 * N + x1));
            for (std::size_t s0 = 0; s0 < 2; ++s0) {
                for (std::size_t s1 = 0; s1 < 2; ++s1) {
                    amps[layout.index_of(x0, s0, x1, s1)] = f * spin[s0 * 2 + s1];
                }
            }
        }
    }
    return StateVector::normalized(std::move(amps));
}

FermionicGround fermionic_ground_state(const GridSpec &grid,
                                       const MoleculeSpec &molecule) {
    if (molecule.electrons != 2) {
        throw UnsupportedError("fermionic_ground_state: two electrons only");
    }
    const auto h = build_spectral_hamiltonian(grid, molecule);
    auto sectors = ground_sector_energies(h);
    const double w = 1.0 / std::sqrt(2.0);
    const RegisterLayout layout{2, grid.qubits_per_dim};
    auto state = embed_spatial_spin(sectors.symmetric_state.cast<cplx>(),
                                    {0.0, w, -w, 0.0}, layout);
    const double e = sectors.symmetric_energy;
    return {e, std::move(state), std::move(sectors)};
}

double hamiltonian_expectation(const SpectralHamiltonian &h, const StateVector &state,
                               const RegisterLayout &layout) {
    check_compatible(state, layout, h.grid);
    const std::size_t N = h.grid_points();
    double e = 0.0;
    for (std::size_t s0 = 0; s0 < 2; ++s0) {
        for (std::size_t s1 = 0; s1 < 2; ++s1) {
            Eigen::VectorXd re(static_cast<Eigen::Index>(N * N));
            Eigen::VectorXd im(static_cast<Eigen::Index>(N * N));
            for (std::size_t x0 = 0; x0 < N; ++x0) {
                for (std::size_t x1 = 0; x1 < N; ++x1) {
                    const cplx a = state[layout.index_of(x0, s0, x1, s1)];
                    re(static_cast<Eigen::Index>(x0 * N + x1)) = a.real();
                    im(static_cast<Eigen::Index>(x0 * N + x1)) = a.imag();
                }
            }
            e += re.dot(h.two_electron * re) + im.dot(h.two_electron * im);
        }
    }
    return e + h.nuclear_repulsion;
}

} // namespace fqvqe
