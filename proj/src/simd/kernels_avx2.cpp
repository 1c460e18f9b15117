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
// AVX2+FMA kernel variants, handed out only after a runtime CPU check.
#include "fqvqe/simd/kernels.hpp"

#include "scalar_impl.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define FQVQE_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace fqvqe::simd {

#if FQVQE_HAVE_AVX2_KERNELS
namespace {

#define FQVQE_AVX2 __attribute__((target("avx2,fma")))

FQVQE_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// c * v for two packed complex numbers and a broadcast complex scalar.
FQVQE_AVX2 inline __m256d cmul(__m256d cre, __m256d cim, __m256d v) {
    const __m256d sw = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(cre, v, _mm256_mul_pd(cim, sw));
}

// Per-lane coefficients for the in-register pair layouts (stride 1 and 2).
struct PairCoeffs {
    __m256d diag;
    __m256d off;
};

FQVQE_AVX2 inline PairCoeffs pair_coeffs(std::size_t s, const double *m) {
    if (s == 1) {
        return {_mm256_setr_pd(m[0], m[3], m[0], m[3]),
                _mm256_setr_pd(m[1], m[2], m[1], m[2])};
    }
    return {_mm256_setr_pd(m[0], m[0], m[3], m[3]),
            _mm256_setr_pd(m[1], m[1], m[2], m[2])};
}

FQVQE_AVX2 inline __m256d pair_swap(std::size_t s, __m256d v) {
    return s == 1 ? _mm256_permute_pd(v, 0b0101)
                  : _mm256_permute2f128_pd(v, v, 0x01);
}

FQVQE_AVX2 void apply_1q_real(double *d, std::size_t n, std::size_t s,
                              const double *m) {
    if (n < 4) {
        ref::apply_1q<double>(d, n, s, m);
        return;
    }
    if (s < 4) {
        const PairCoeffs c = pair_coeffs(s, m);
        for (std::size_t i = 0; i < n; i += 4) {
            const __m256d v = _mm256_loadu_pd(d + i);
            _mm256_storeu_pd(d + i, _mm256_fmadd_pd(c.diag, v,
                                                    _mm256_mul_pd(c.off, pair_swap(s, v))));
        }
        return;
    }
    const __m256d m0 = _mm256_set1_pd(m[0]), m1 = _mm256_set1_pd(m[1]);
    const __m256d m2 = _mm256_set1_pd(m[2]), m3 = _mm256_set1_pd(m[3]);
    for (std::size_t base = 0; base < n; base += 2 * s) {
        for (std::size_t a = base; a < base + s; a += 4) {
            const __m256d x = _mm256_loadu_pd(d + a);
            const __m256d y = _mm256_loadu_pd(d + a + s);
            _mm256_storeu_pd(d + a, _mm256_fmadd_pd(m0, x, _mm256_mul_pd(m1, y)));
            _mm256_storeu_pd(d + a + s,
                             _mm256_fmadd_pd(m2, x, _mm256_mul_pd(m3, y)));
        }
    }
}

FQVQE_AVX2 double expval_1q_real(const double *bra, const double *ket,
                                 std::size_t n, std::size_t s,
                                 const double *m) {
    if (n < 4) {
        return ref::expval_1q<double>(bra, ket, n, s, m);
    }
    __m256d acc = _mm256_setzero_pd();
    if (s < 4) {
        const PairCoeffs c = pair_coeffs(s, m);
        for (std::size_t i = 0; i < n; i += 4) {
            const __m256d v = _mm256_loadu_pd(ket + i);
            const __m256d t =
                _mm256_fmadd_pd(c.diag, v, _mm256_mul_pd(c.off, pair_swap(s, v)));
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(bra + i), t, acc);
        }
        return hsum(acc);
    }
    const __m256d m0 = _mm256_set1_pd(m[0]), m1 = _mm256_set1_pd(m[1]);
    const __m256d m2 = _mm256_set1_pd(m[2]), m3 = _mm256_set1_pd(m[3]);
    for (std::size_t base = 0; base < n; base += 2 * s) {
        for (std::size_t a = base; a < base + s; a += 4) {
            const __m256d x = _mm256_loadu_pd(ket + a);
            const __m256d y = _mm256_loadu_pd(ket + a + s);
            const __m256d tx = _mm256_fmadd_pd(m0, x, _mm256_mul_pd(m1, y));
            const __m256d ty = _mm256_fmadd_pd(m2, x, _mm256_mul_pd(m3, y));
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(bra + a), tx, acc);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(bra + a + s), ty, acc);
        }
    }
    return hsum(acc);
}

FQVQE_AVX2 void apply_1q_complex(cplx *data, std::size_t n, std::size_t s,
                                 const cplx *m) {
    if (s < 2) {
        ref::apply_1q<cplx>(data, n, s, m);
        return;
    }
    auto *d = reinterpret_cast<double *>(data);
    __m256d re[4], im[4];
    for (int k = 0; k < 4; ++k) {
        re[k] = _mm256_set1_pd(m[k].real());
        im[k] = _mm256_set1_pd(m[k].imag());
    }
    for (std::size_t base = 0; base < n; base += 2 * s) {
        for (std::size_t a = base; a < base + s; a += 2) {
            const __m256d x = _mm256_loadu_pd(d + 2 * a);
            const __m256d y = _mm256_loadu_pd(d + 2 * (a + s));
            _mm256_storeu_pd(d + 2 * a, _mm256_add_pd(cmul(re[0], im[0], x),
                                                      cmul(re[1], im[1], y)));
            _mm256_storeu_pd(d + 2 * (a + s),
                             _mm256_add_pd(cmul(re[2], im[2], x),
                                           cmul(re[3], im[3], y)));
        }
    }
}

// Two-qubit real gate where one stride (sx) is >= 4 and the other (sy) is 1
// or 2: the sy pair lives inside each vector, the sx pair across vectors.
struct MixedQuad {
    std::size_t sx, sy;
    __m256d k[2][2][2]; // [out x][in x][lane flip]
};

FQVQE_AVX2 inline MixedQuad mixed_quad(std::size_t sa, std::size_t sb, const double *m) {
    MixedQuad q{};
    const bool x_is_a = sa >= 4;
    q.sx = x_is_a ? sa : sb;
    q.sy = x_is_a ? sb : sa;
    auto idx = [&](std::size_t x, std::size_t y) {
        return x_is_a ? (x << 1) | y : (y << 1) | x;
    };
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t xp = 0; xp < 2; ++xp) {
            for (std::size_t f = 0; f < 2; ++f) {
                double lane[4];
                for (std::size_t l = 0; l < 4; ++l) {
                    const std::size_t y = q.sy == 1 ? (l & 1U) : (l >> 1);
                    lane[l] = m[4 * idx(x, y) + idx(xp, y ^ f)];
                }
                q.k[x][xp][f] = _mm256_loadu_pd(lane);
            }
        }
    }
    return q;
}

FQVQE_AVX2 inline __m256d mixed_row(const MixedQuad &q, std::size_t x, __m256d v0,
                                    __m256d s0, __m256d v1, __m256d s1) {
    __m256d o = _mm256_mul_pd(q.k[x][0][0], v0);
    o = _mm256_fmadd_pd(q.k[x][0][1], s0, o);
    o = _mm256_fmadd_pd(q.k[x][1][0], v1, o);
    return _mm256_fmadd_pd(q.k[x][1][1], s1, o);
}

FQVQE_AVX2 void apply_2q_real(double *d, std::size_t n, std::size_t sa,
                              std::size_t sb, const double *m) {
    const std::size_t lo = sa < sb ? sa : sb;
    const std::size_t hi = sa < sb ? sb : sa;
    if (lo < 4 && hi >= 4 && n >= 8) {
        const MixedQuad q = mixed_quad(sa, sb, m);
        for (std::size_t base = 0; base < n; base += 2 * q.sx) {
            for (std::size_t i = base; i < base + q.sx; i += 4) {
                const __m256d v0 = _mm256_loadu_pd(d + i);
                const __m256d v1 = _mm256_loadu_pd(d + i + q.sx);
                const __m256d s0 = pair_swap(q.sy, v0);
                const __m256d s1 = pair_swap(q.sy, v1);
                _mm256_storeu_pd(d + i, mixed_row(q, 0, v0, s0, v1, s1));
                _mm256_storeu_pd(d + i + q.sx, mixed_row(q, 1, v0, s0, v1, s1));
            }
        }
        return;
    }
    if (lo < 4) {
        ref::apply_2q<double>(d, n, sa, sb, m);
        return;
    }
    __m256d mm[16];
    for (int k = 0; k < 16; ++k) {
        mm[k] = _mm256_set1_pd(m[k]);
    }
    for (std::size_t h = 0; h < n; h += 2 * hi) {
        for (std::size_t b = h; b < h + hi; b += 2 * lo) {
            for (std::size_t i = b; i < b + lo; i += 4) {
                double *p[4] = {d + i, d + i + sb, d + i + sa, d + i + sa + sb};
                const __m256d v[4] = {_mm256_loadu_pd(p[0]), _mm256_loadu_pd(p[1]),
                                      _mm256_loadu_pd(p[2]), _mm256_loadu_pd(p[3])};
                for (int r = 0; r < 4; ++r) {
                    __m256d o = _mm256_mul_pd(mm[4 * r], v[0]);
                    o = _mm256_fmadd_pd(mm[4 * r + 1], v[1], o);
                    o = _mm256_fmadd_pd(mm[4 * r + 2], v[2], o);
                    o = _mm256_fmadd_pd(mm[4 * r + 3], v[3], o);
                    _mm256_storeu_pd(p[r], o);
                }
            }
        }
    }
}

FQVQE_AVX2 double expval_2q_real(const double *bra, const double *ket,
                                 std::size_t n, std::size_t sa, std::size_t sb,
                                 const double *m) {
    const std::size_t lo = sa < sb ? sa : sb;
    const std::size_t hi = sa < sb ? sb : sa;
    if (lo < 4 && hi >= 4 && n >= 8) {
        const MixedQuad q = mixed_quad(sa, sb, m);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t base = 0; base < n; base += 2 * q.sx) {
            for (std::size_t i = base; i < base + q.sx; i += 4) {
                const __m256d v0 = _mm256_loadu_pd(ket + i);
                const __m256d v1 = _mm256_loadu_pd(ket + i + q.sx);
                const __m256d s0 = pair_swap(q.sy, v0);
                const __m256d s1 = pair_swap(q.sy, v1);
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(bra + i),
                                      mixed_row(q, 0, v0, s0, v1, s1), acc);
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(bra + i + q.sx),
                                      mixed_row(q, 1, v0, s0, v1, s1), acc);
            }
        }
        return hsum(acc);
    }
    if (lo < 4) {
        return ref::expval_2q<double>(bra, ket, n, sa, sb, m);
    }
    __m256d mm[16];
    for (int k = 0; k < 16; ++k) {
        mm[k] = _mm256_set1_pd(m[k]);
    }
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t h = 0; h < n; h += 2 * hi) {
        for (std::size_t b = h; b < h + hi; b += 2 * lo) {
            for (std::size_t i = b; i < b + lo; i += 4) {
                const std::size_t off[4] = {i, i + sb, i + sa, i + sa + sb};
                const __m256d v[4] = {
                    _mm256_loadu_pd(ket + off[0]), _mm256_loadu_pd(ket + off[1]),
                    _mm256_loadu_pd(ket + off[2]), _mm256_loadu_pd(ket + off[3])};
                for (int r = 0; r < 4; ++r) {
                    __m256d o = _mm256_mul_pd(mm[4 * r], v[0]);
                    o = _mm256_fmadd_pd(mm[4 * r + 1], v[1], o);
                    o = _mm256_fmadd_pd(mm[4 * r + 2], v[2], o);
                    o = _mm256_fmadd_pd(mm[4 * r + 3], v[3], o);
                    acc = _mm256_fmadd_pd(_mm256_loadu_pd(bra + off[r]), o, acc);
                }
            }
        }
    }
    return hsum(acc);
}

FQVQE_AVX2 void apply_2q_complex(cplx *data, std::size_t n, std::size_t sa,
                                 std::size_t sb, const cplx *m) {
    const std::size_t lo = sa < sb ? sa : sb;
    const std::size_t hi = sa < sb ? sb : sa;
    if (lo < 2) {
        ref::apply_2q<cplx>(data, n, sa, sb, m);
        return;
    }
    auto *d = reinterpret_cast<double *>(data);
    __m256d re[16], im[16];
    for (int k = 0; k < 16; ++k) {
        re[k] = _mm256_set1_pd(m[k].real());
        im[k] = _mm256_set1_pd(m[k].imag());
    }
    for (std::size_t h = 0; h < n; h += 2 * hi) {
        for (std::size_t b = h; b < h + hi; b += 2 * lo) {
            for (std::size_t i = b; i < b + lo; i += 2) {
                double *p[4] = {d + 2 * i, d + 2 * (i + sb), d + 2 * (i + sa),
                                d + 2 * (i + sa + sb)};
                const __m256d v[4] = {_mm256_loadu_pd(p[0]), _mm256_loadu_pd(p[1]),
                                      _mm256_loadu_pd(p[2]), _mm256_loadu_pd(p[3])};
                for (int r = 0; r < 4; ++r) {
                    __m256d o = cmul(re[4 * r], im[4 * r], v[0]);
                    for (int c = 1; c < 4; ++c) {
                        o = _mm256_add_pd(o, cmul(re[4 * r + c], im[4 * r + c], v[c]));
                    }
                    _mm256_storeu_pd(p[r], o);
                }
            }
        }
    }
}

FQVQE_AVX2 double ry_backward_real(double *psi, double *lam, std::size_t n,
                                  std::size_t stride, double c, double s) {
    if (n < 4) {
        return ref::ry_backward(psi, lam, n, stride, c, s);
    }
    if (stride < 4) {
        const double mt[4] = {c, s, -s, c};
        const double g[4] = {0.0, -1.0, 1.0, 0.0};
        const PairCoeffs r = pair_coeffs(stride, mt);
        const __m256d goff = pair_coeffs(stride, g).off;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < n; i += 4) {
            const __m256d a = _mm256_loadu_pd(psi + i);
            const __m256d b = _mm256_loadu_pd(lam + i);
            const __m256d as = pair_swap(stride, a);
            const __m256d bs = pair_swap(stride, b);
            acc = _mm256_fmadd_pd(b, _mm256_mul_pd(goff, as), acc);
            _mm256_storeu_pd(psi + i, _mm256_fmadd_pd(r.diag, a, _mm256_mul_pd(r.off, as)));
            _mm256_storeu_pd(lam + i, _mm256_fmadd_pd(r.diag, b, _mm256_mul_pd(r.off, bs)));
        }
        return 0.5 * hsum(acc);
    }
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 4) {
            double *p0 = psi + i;
            double *p1 = psi + i + stride;
            double *l0 = lam + i;
            double *l1 = lam + i + stride;
            const __m256d a0 = _mm256_loadu_pd(p0);
            const __m256d a1 = _mm256_loadu_pd(p1);
            const __m256d b0 = _mm256_loadu_pd(l0);
            const __m256d b1 = _mm256_loadu_pd(l1);
            acc = _mm256_fmadd_pd(b1, a0, acc);
            acc = _mm256_fnmadd_pd(b0, a1, acc);
            _mm256_storeu_pd(p0, _mm256_fmadd_pd(vc, a0, _mm256_mul_pd(vs, a1)));
            _mm256_storeu_pd(p1, _mm256_fnmadd_pd(vs, a0, _mm256_mul_pd(vc, a1)));
            _mm256_storeu_pd(l0, _mm256_fmadd_pd(vc, b0, _mm256_mul_pd(vs, b1)));
            _mm256_storeu_pd(l1, _mm256_fnmadd_pd(vs, b0, _mm256_mul_pd(vc, b1)));
        }
    }
    return 0.5 * hsum(acc);
}

FQVQE_AVX2 void pair_swap_real(double *d, std::size_t n, std::size_t st,
                               std::size_t sc) {
    if (n < 8 || (sc != 0 && sc < 4)) {
        ref::pair_swap<double>(d, n, st, sc);
        return;
    }
    if (st < 4) {
        for (std::size_t i = 0; i < n; i += 4) {
            if (sc == 0 || (i & sc) != 0) {
                _mm256_storeu_pd(d + i, pair_swap(st, _mm256_loadu_pd(d + i)));
            }
        }
        return;
    }
    for (std::size_t base = 0; base < n; base += 2 * st) {
        for (std::size_t a = base; a < base + st; a += 4) {
            if (sc == 0 || (a & sc) != 0) {
                const __m256d x = _mm256_loadu_pd(d + a);
                const __m256d y = _mm256_loadu_pd(d + a + st);
                _mm256_storeu_pd(d + a, y);
                _mm256_storeu_pd(d + a + st, x);
            }
        }
    }
}

FQVQE_AVX2 void pair_swap_complex(cplx *data, std::size_t n, std::size_t st,
                                  std::size_t sc) {
    if (n < 4 || (sc != 0 && sc < 2)) {
        ref::pair_swap<cplx>(data, n, st, sc);
        return;
    }
    auto *d = reinterpret_cast<double *>(data);
    if (st < 2) {
        for (std::size_t i = 0; i < n; i += 2) {
            if (sc == 0 || (i & sc) != 0) {
                const __m256d v = _mm256_loadu_pd(d + 2 * i);
                _mm256_storeu_pd(d + 2 * i, _mm256_permute2f128_pd(v, v, 0x01));
            }
        }
        return;
    }
    for (std::size_t base = 0; base < n; base += 2 * st) {
        for (std::size_t a = base; a < base + st; a += 2) {
            if (sc == 0 || (a & sc) != 0) {
                const __m256d x = _mm256_loadu_pd(d + 2 * a);
                const __m256d y = _mm256_loadu_pd(d + 2 * (a + st));
                _mm256_storeu_pd(d + 2 * a, y);
                _mm256_storeu_pd(d + 2 * (a + st), x);
            }
        }
    }
}

FQVQE_AVX2 double dot_real(const double *a, const double *b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                               _mm256_loadu_pd(b + i + 4), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

FQVQE_AVX2 cplx dot_complex(const cplx *a, const cplx *b, std::size_t n) {
    const auto *pa = reinterpret_cast<const double *>(a);
    const auto *pb = reinterpret_cast<const double *>(b);
    __m256d rr = _mm256_setzero_pd(); // ar*br, ai*bi
    __m256d ri = _mm256_setzero_pd(); // ar*bi, ai*br
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        rr = _mm256_fmadd_pd(va, vb, rr);
        ri = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), ri);
    }
    alignas(32) double t[4];
    _mm256_store_pd(t, ri);
    cplx acc{hsum(rr), t[0] - t[1] + t[2] - t[3]};
    for (; i < n; ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

FQVQE_AVX2 void diag_mul_add_real(double *out, const double *diag,
                                  const double *in, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(_mm256_loadu_pd(diag + i),
                                                  _mm256_loadu_pd(in + i),
                                                  _mm256_loadu_pd(out + i)));
    }
    for (; i < n; ++i) {
        out[i] += diag[i] * in[i];
    }
}

FQVQE_AVX2 void diag_mul_add_complex(cplx *out, const double *diag,
                                     const cplx *in, std::size_t n) {
    auto *po = reinterpret_cast<double *>(out);
    const auto *pi = reinterpret_cast<const double *>(in);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d dd = _mm_loadu_pd(diag + i);
        const __m256d D =
            _mm256_permute4x64_pd(_mm256_castpd128_pd256(dd), 0b01010000);
        _mm256_storeu_pd(po + 2 * i,
                         _mm256_fmadd_pd(D, _mm256_loadu_pd(pi + 2 * i),
                                         _mm256_loadu_pd(po + 2 * i)));
    }
    for (; i < n; ++i) {
        out[i] += diag[i] * in[i];
    }
}

#undef FQVQE_AVX2

const KernelTable kAvx2{
    "avx2",
    &apply_1q_real,
    &apply_1q_complex,
    &apply_2q_real,
    &apply_2q_complex,
    &expval_1q_real,
    &ref::expval_1q<cplx>,
    &expval_2q_real,
    &ref::expval_2q<cplx>,
    &pair_swap_real,
    &pair_swap_complex,
    &ry_backward_real,
    &dot_real,
    &dot_complex,
    &diag_mul_add_real,
    &diag_mul_add_complex,
};

} // namespace

const KernelTable *avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2") &&
                                  __builtin_cpu_supports("fma");
    return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable *avx2_kernels() { return nullptr; }

#endif

} // namespace fqvqe::simd
