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
 * Data-parallel amplitude kernels used by the state-vector simulator.
 *
 * Every kernel has a portable scalar reference implementation. An AVX2+FMA
 * variant is compiled alongside it with function-level target attributes and
 * selected at runtime when the CPU supports it. Setting the environment
 * variable FQVQE_SIMD=scalar forces the reference table.
 *
 * Layout conventions shared by all kernels:
 *  - `n` is the number of amplitudes (a power of two).
 *  - A one-qubit kernel with stride `s` acts on the pairs (i, i + s) for
 *    every i with bit s clear. The 2x2 matrix `m` is row-major.
 *  - A two-qubit kernel with strides (sa, sb) acts on the quadruples
 *    (i, i+sb, i+sa, i+sa+sb) for every i with both bits clear, ordered as
 *    local index (bit_a << 1) | bit_b. The 4x4 matrix `m` is row-major.
 *  - "expval" kernels return <bra| M |ket> restricted to the targeted
 *    subspace, i.e. sum_i conj(bra_i) (M ket)_i with M acting as above.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace fqvqe::simd {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;

    void (*apply_1q_real)(double *data, std::size_t n, std::size_t stride,
                          const double *m);
    void (*apply_1q_complex)(cplx *data, std::size_t n, std::size_t stride,
                             const cplx *m);
    void (*apply_2q_real)(double *data, std::size_t n, std::size_t sa,
                          std::size_t sb, const double *m);
    void (*apply_2q_complex)(cplx *data, std::size_t n, std::size_t sa,
                             std::size_t sb, const cplx *m);

    double (*expval_1q_real)(const double *bra, const double *ket,
                             std::size_t n, std::size_t stride,
                             const double *m);
    cplx (*expval_1q_complex)(const cplx *bra, const cplx *ket, std::size_t n,
                              std::size_t stride, const cplx *m);
    double (*expval_2q_real)(const double *bra, const double *ket,
                             std::size_t n, std::size_t sa, std::size_t sb,
                             const double *m);
    cplx (*expval_2q_complex)(const cplx *bra, const cplx *ket, std::size_t n,
                              std::size_t sa, std::size_t sb, const cplx *m);

    /// Swaps (i, i + st) for every i with bit st clear and, when sc != 0,
    /// bit sc set (X for sc == 0, CNOT otherwise).
    void (*pair_swap_real)(double *data, std::size_t n, std::size_t st,
                           std::size_t sc);
    void (*pair_swap_complex)(cplx *data, std::size_t n, std::size_t st,
                              std::size_t sc);

    /// Backward step of Ry(theta) on a real state: returns
    /// <lam| (-iY/2) |psi>, then applies Ry(theta)^T to both psi and lam.
    /// (c, s) = (cos(theta/2), sin(theta/2)).
    double (*ry_backward_real)(double *psi, double *lam, std::size_t n,
                               std::size_t stride, double c, double s);

    /// sum_i a_i b_i
    double (*dot_real)(const double *a, const double *b, std::size_t n);
    /// sum_i conj(a_i) b_i
    cplx (*dot_complex)(const cplx *a, const cplx *b, std::size_t n);

    /// out_i += diag_i * in_i
    void (*diag_mul_add_real)(double *out, const double *diag,
                              const double *in, std::size_t n);
    void (*diag_mul_add_complex)(cplx *out, const double *diag, const cplx *in,
                                 std::size_t n);
};

/// Portable reference kernels.
const KernelTable &scalar_kernels();

/// AVX2+FMA kernels, or nullptr if the CPU (or compiler) lacks support.
const KernelTable *avx2_kernels();

/// The table used by the simulator: AVX2 when available unless overridden
/// by FQVQE_SIMD=scalar.
const KernelTable &active_kernels();

/// Overrides the active table (tests and benchmarks). Not thread-safe with
/// respect to concurrently running kernels.
void set_active_kernels(const KernelTable &table);

} // namespace fqvqe::simd
