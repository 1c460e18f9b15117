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
#include "fqvqe/analysis.hpp"

#include "fqvqe/error.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fqvqe {
namespace {

void require_two_electrons(const StateVector &state, const RegisterLayout &layout) {
    if (layout.electrons != 2) {
        throw UnsupportedError("analysis: two electrons only");
    }
    if (state.num_qubits() != layout.total_qubits()) {
        throw DomainError("analysis: state does not match layout");
    }
}

} // namespace

StateVector swap_registers(const StateVector &state, const RegisterLayout &layout) {
    require_two_electrons(state, layout);
    const std::size_t d = layout.register_dim();
    std::vector<cplx> out(state.size());
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            out[a * d + b] = state[b * d + a];
        }
    }
    return StateVector::from_amplitudes(std::move(out), 1e-8);
}

SwapTest swap_expectation(const StateVector &state, const RegisterLayout &layout) {
    require_two_electrons(state, layout);
    const std::size_t d = layout.register_dim();
    double v = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            v += (std::conj(state[a * d + b]) * state[b * d + a]).real();
        }
    }
    v = std::clamp(v, -1.0, 1.0);
    return {v, 0.5 * (1.0 + v), 0.5 * (1.0 - v)};
}

SpinBlock spin_block(const StateVector &state, const RegisterLayout &layout, Spin s1,
                     Spin s2) {
    require_two_electrons(state, layout);
    const std::size_t N = layout.grid_points();
    SpinBlock b{s1, s2, Eigen::MatrixXcd(static_cast<Eigen::Index>(N),
                                         static_cast<Eigen::Index>(N)),
                0.0};
    for (std::size_t x0 = 0; x0 < N; ++x0) {
        for (std::size_t x1 = 0; x1 < N; ++x1) {
            b.table(static_cast<Eigen::Index>(x0), static_cast<Eigen::Index>(x1)) =
                state[layout.index_of(x0, static_cast<std::size_t>(s1), x1,
                                      static_cast<std::size_t>(s2))];
        }
    }
    b.weight = b.table.squaredNorm();
    return b;
}

Eigen::MatrixXcd electron_coefficients(const StateVector &state,
                                       const RegisterLayout &layout) {
    require_two_electrons(state, layout);
    const auto d = static_cast<Eigen::Index>(layout.register_dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            m(a, b) = state[static_cast<std::size_t>(a * d + b)];
        }
    }
    return m;
}

Eigen::MatrixXcd SchmidtResult::reconstruct() const {
    return left * coefficients.cast<cplx>().asDiagonal() * right.transpose();
}

SchmidtResult schmidt_decompose(const Eigen::MatrixXcd &coefficients,
                                std::string partition) {
    const double norm = coefficients.norm();
    if (!(norm > 0.0)) {
        throw DomainError("schmidt_decompose: zero-norm coefficient table");
    }
    const Eigen::MatrixXcd m = coefficients / norm;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd s = svd.singularValues();
    const Eigen::MatrixXcd U = svd.matrixU();
    const Eigen::MatrixXcd V = svd.matrixV().conjugate();
    const auto r = s.size();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (std::abs(s(a) - s(b)) > 1e-12) {
            return s(a) > s(b);
        }
        for (Eigen::Index k = 0; k < U.rows(); ++k) {
            const double ma = std::abs(U(k, a));
            const double mb = std::abs(U(k, b));
            if (std::abs(ma - mb) > 1e-12) {
                return ma > mb;
            }
        }
        return false;
    });

    SchmidtResult out;
    out.partition = std::move(partition);
    out.coefficients.resize(r);
    out.left.resize(U.rows(), r);
    out.right.resize(V.rows(), r);
    for (Eigen::Index i = 0; i < r; ++i) {
        const Eigen::Index src = order[static_cast<std::size_t>(i)];
        Eigen::VectorXcd mu = U.col(src);
        Eigen::VectorXcd chi = V.col(src);
        for (Eigen::Index k = 0; k < mu.size(); ++k) {
            if (std::abs(mu(k)) > 1e-12) {
                const cplx phase = mu(k) / std::abs(mu(k));
                mu *= std::conj(phase);
                chi *= phase;
                break;
            }
        }
        out.coefficients(i) = s(src);
        out.left.col(i) = mu;
        out.right.col(i) = chi;
    }
    return out;
}

SchmidtResult schmidt_electrons(const StateVector &state, const RegisterLayout &layout) {
    return schmidt_decompose(electron_coefficients(state, layout), "electrons");
}

SchmidtResult schmidt_spin_block(const SpinBlock &block) {
    if (!(block.weight > 1e-28)) {
        throw DomainError("schmidt_spin_block: block has zero weight");
    }
    const char *names[2] = {"down", "up"};
    return schmidt_decompose(block.table,
                             std::string("spin_block_") +
                                 names[static_cast<std::size_t>(block.s1)] + "_" +
                                 names[static_cast<std::size_t>(block.s2)]);
}

double entanglement_entropy(const SchmidtResult &result) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < result.coefficients.size(); ++i) {
        const double p = result.coefficients(i) * result.coefficients(i);
        if (p >= 1e-14) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

OrbitalTable orbital_export(const SchmidtResult &result, const GridSpec &grid,
                            std::size_t max_orbitals) {
    const auto rows = static_cast<std::size_t>(result.left.rows());
    const std::size_t N = grid.num_points();
    const bool with_spin = rows == 2 * N;
    if (!with_spin && rows != N) {
        throw DomainError("orbital_export: orbital dimension does not match grid");
    }
    OrbitalTable t;
    for (Eigen::Index i = 0; i < result.coefficients.size() && t.orbitals < max_orbitals;
         ++i) {
        if (result.coefficients(i) <= 1e-10) {
            break;
        }
        ++t.orbitals;
        t.coefficients.push_back(result.coefficients(i));
        t.left.emplace_back(result.left.col(i).data(), result.left.col(i).data() + rows);
        t.right.emplace_back(result.right.col(i).data(),
                             result.right.col(i).data() + rows);
    }
    for (std::size_t j = 0; j < rows; ++j) {
        t.position.push_back(position_of(grid, with_spin ? j / 2 : j));
        t.spin.push_back(with_spin ? static_cast<int>(j % 2) : -1);
    }
    return t;
}

} // namespace fqvqe
