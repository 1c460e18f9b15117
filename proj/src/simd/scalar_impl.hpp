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
// Reference kernel templates shared by the scalar table and by the AVX2
// table's fallbacks for layouts it does not vectorize.
#pragma once

#include "fqvqe/simd/kernels.hpp"

#include <type_traits>
#include <utility>

namespace fqvqe::simd::ref {

template <class T>
void apply_1q(T *data, std::size_t n, std::size_t s, const T *m) {
    for (std::size_t base = 0; base < n; base += 2 * s) {
        for (std::size_t a = base; a < base + s; ++a) {
            const T x = data[a];
            const T y = data[a + s];
            data[a] = m[0] * x + m[1] * y;
            data[a + s] = m[2] * x + m[3] * y;
        }
    }
}

template <class T> T conj_if(const T &v) {
    if constexpr (std::is_same_v<T, double>) {
        return v;
    } else {
        return std::conj(v);
    }
}

template <class T>
T expval_1q(const T *bra, const T *ket, std::size_t n, std::size_t s,
            const T *m) {
    T acc{};
    for (std::size_t base = 0; base < n; base += 2 * s) {
        for (std::size_t a = base; a < base + s; ++a) {
            const T x = ket[a];
            const T y = ket[a + s];
            acc += conj_if(bra[a]) * (m[0] * x + m[1] * y) +
                   conj_if(bra[a + s]) * (m[2] * x + m[3] * y);
        }
    }
    return acc;
}

// Visits the base index of every quadruple (both target bits clear).
template <class F>
void for_each_quad(std::size_t n, std::size_t sa, std::size_t sb, F &&f) {
    const std::size_t lo = sa < sb ? sa : sb;
    const std::size_t hi = sa < sb ? sb : sa;
    for (std::size_t h = 0; h < n; h += 2 * hi) {
        for (std::size_t m = h; m < h + hi; m += 2 * lo) {
            for (std::size_t j = m; j < m + lo; ++j) {
                f(j);
            }
        }
    }
}

template <class T>
void apply_2q(T *data, std::size_t n, std::size_t sa, std::size_t sb,
              const T *m) {
    for_each_quad(n, sa, sb, [&](std::size_t i) {
        const std::size_t idx[4] = {i, i + sb, i + sa, i + sa + sb};
        const T v[4] = {data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            data[idx[r]] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] +
                           m[4 * r + 2] * v[2] + m[4 * r + 3] * v[3];
        }
    });
}

template <class T>
T expval_2q(const T *bra, const T *ket, std::size_t n, std::size_t sa,
            std::size_t sb, const T *m) {
    T acc{};
    for_each_quad(n, sa, sb, [&](std::size_t i) {
        const std::size_t idx[4] = {i, i + sb, i + sa, i + sa + sb};
        const T v[4] = {ket[idx[0]], ket[idx[1]], ket[idx[2]], ket[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            acc += conj_if(bra[idx[r]]) *
                   (m[4 * r] * v[0] + m[4 * r + 1] * v[1] +
                    m[4 * r + 2] * v[2] + m[4 * r + 3] * v[3]);
        }
    });
    return acc;
}

template <class T>
void pair_swap(T *data, std::size_t n, std::size_t st, std::size_t sc) {
    for (std::size_t base = 0; base < n; base += 2 * st) {
        for (std::size_t a = base; a < base + st; ++a) {
            if (sc == 0 || (a & sc) != 0) {
                std::swap(data[a], data[a + st]);
            }
        }
    }
}

inline double ry_backward(double *psi, double *lam, std::size_t n,
                          std::size_t stride, double c, double s) {
    double acc = 0.0;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const double a0 = psi[i], a1 = psi[i + stride];
            const double b0 = lam[i], b1 = lam[i + stride];
            acc += b1 * a0 - b0 * a1;
            psi[i] = c * a0 + s * a1;
            psi[i + stride] = c * a1 - s * a0;
            lam[i] = c * b0 + s * b1;
            lam[i + stride] = c * b1 - s * b0;
        }
    }
    return 0.5 * acc;
}

inline double dot_real(const double *a, const double *b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

inline cplx dot_complex(const cplx *a, const cplx *b, std::size_t n) {
    cplx acc{};
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

template <class T>
void diag_mul_add(T *out, const double *diag, const T *in, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] += diag[i] * in[i];
    }
}

} // namespace fqvqe::simd::ref
