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

#pragma once

#include "fqvqe/grid.hpp"
#include "fqvqe/layout.hpp"
#include "fqvqe/state_vector.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace fqvqe::test {

using cplx = std::complex<double>;

inline std::vector<cplx> random_amplitudes(std::size_t num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<cplx> v(std::size_t{1} << num_qubits);
    double norm = 0.0;
    for (auto &a : v) {
        a = {n(rng), n(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

inline StateVector random_state(std::size_t num_qubits, std::mt19937_64 &rng) {
    return StateVector::from_amplitudes(random_amplitudes(num_qubits, rng));
}

inline Eigen::MatrixXcd to_matrix(const std::array<cplx, 4> &m) {
    Eigen::MatrixXcd out(2, 2);
    out << m[0], m[1], m[2], m[3];
    return out;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Full 2^Q matrix of a one-qubit gate, qubit 0 most significant.
inline Eigen::MatrixXcd full_1q(std::size_t nq, std::size_t q, const std::array<cplx, 4> &m) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t k = 0; k < nq; ++k) {
        out = kron(out, k == q ? to_matrix(m) : Eigen::MatrixXcd::Identity(2, 2));
    }
    return out;
}

/// Full 2^Q matrix of a two-qubit gate; local index (bit_a << 1) | bit_b.
inline Eigen::MatrixXcd full_2q(std::size_t nq, std::size_t a, std::size_t b,
                                const std::array<cplx, 16> &m) {
    const std::size_t dim = std::size_t{1} << nq;
    const std::size_t ma = std::size_t{1} << (nq - 1 - a);
    const std::size_t mb = std::size_t{1} << (nq - 1 - b);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~(ma | mb)) != (c & ~(ma | mb))) {
                continue;
            }
            const std::size_t lr = ((r & ma) ? 2 : 0) | ((r & mb) ? 1 : 0);
            const std::size_t lc = ((c & ma) ? 2 : 0) | ((c & mb) ? 1 : 0);
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[4 * lr + lc];
        }
    }
    return out;
}

inline Eigen::VectorXcd to_vector(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline double max_abs_diff(const StateVector &s, const Eigen::VectorXcd &v) {
    return (to_vector(s) - v).cwiseAbs().maxCoeff();
}

// Independent Hamiltonian oracle built straight from the formulas.

inline double oracle_position(const GridSpec &g, std::size_t j) {
    return g.r_min + static_cast<double>(j) * (g.r_max - g.r_min) /
                         static_cast<double>(std::size_t{1} << g.qubits_per_dim);
}

/// T_{jl} = (1/N) sum_n (k_n^2 / 2) cos(2 pi n (j - l) / N), signed n.
inline Eigen::MatrixXd oracle_kinetic(const GridSpec &g) {
    const auto N = static_cast<long>(std::size_t{1} << g.qubits_per_dim);
    const double box = g.r_max - g.r_min;
    Eigen::MatrixXd t(N, N);
    for (long j = 0; j < N; ++j) {
        for (long l = 0; l < N; ++l) {
            double s = 0.0;
            for (long n = -N / 2; n < N / 2; ++n) {
                const double k = 2.0 * std::numbers::pi * static_cast<double>(n) / box;
                s += 0.5 * k * k *
                     std::cos(2.0 * std::numbers::pi * static_cast<double>(n * (j - l)) /
                              static_cast<double>(N));
            }
            t(j, l) = s / static_cast<double>(N);
        }
    }
    return t;
}

inline double oracle_nuclear(const MoleculeSpec &m) {
    double e = 0.0;
    for (std::size_t p = 0; p < m.protons.size(); ++p) {
        for (std::size_t q = p + 1; q < m.protons.size(); ++q) {
            e += m.protons[p].charge * m.protons[q].charge /
                 std::abs(m.protons[p].position - m.protons[q].position);
        }
    }
    return e;
}

/// Two-electron spatial Hamiltonian (index r1 * N + r2), without E_nn.
inline Eigen::MatrixXd oracle_h2(const GridSpec &g, const MoleculeSpec &m) {
    const auto N = static_cast<Eigen::Index>(std::size_t{1} << g.qubits_per_dim);
    const Eigen::MatrixXd t = oracle_kinetic(g);
    const double eps = g.epsilon;
    std::vector<double> ven(static_cast<std::size_t>(N), 0.0);
    for (Eigen::Index r = 0; r < N; ++r) {
        const double x = oracle_position(g, static_cast<std::size_t>(r));
        for (const auto &p : m.protons) {
            ven[static_cast<std::size_t>(r)] -= p.charge / std::abs(x - p.position + eps);
        }
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(N * N, N * N);
    for (Eigen::Index r1 = 0; r1 < N; ++r1) {
        for (Eigen::Index r2 = 0; r2 < N; ++r2) {
            const Eigen::Index row = r1 * N + r2;
            for (Eigen::Index s = 0; s < N; ++s) {
                h(row, s * N + r2) += t(r1, s);
                h(row, r1 * N + s) += t(r2, s);
            }
            const double x1 = oracle_position(g, static_cast<std::size_t>(r1));
            const double x2 = oracle_position(g, static_cast<std::size_t>(r2));
            const double vee = 0.5 / std::abs(x1 - x2 + eps) + 0.5 / std::abs(x2 - x1 + eps);
            h(row, row) += ven[static_cast<std::size_t>(r1)] + ven[static_cast<std::size_t>(r2)] + vee;
        }
    }
    return h;
}

/// <psi| H2 (x) 1_spin |psi> + E_nn for a two-electron register state.
inline double oracle_energy(const Eigen::MatrixXd &h2, double enn, const StateVector &s,
                            const RegisterLayout &layout) {
    const std::size_t N = layout.grid_points();
    double e = 0.0;
    for (std::size_t s0 = 0; s0 < 2; ++s0) {
        for (std::size_t s1 = 0; s1 < 2; ++s1) {
            Eigen::VectorXcd block(static_cast<Eigen::Index>(N * N));
            for (std::size_t x0 = 0; x0 < N; ++x0) {
                for (std::size_t x1 = 0; x1 < N; ++x1) {
                    block(static_cast<Eigen::Index>(x0 * N + x1)) =
                        s[layout.index_of(x0, s0, x1, s1)];
                }
            }
            e += (block.adjoint() * (h2.cast<cplx>() * block))(0, 0).real();
        }
    }
    return e + enn;
}

} // namespace fqvqe::test
