// Copyright 2026 The VAns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// AVX2/FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has confirmed CPU support.
#include "vans/kernels.hpp"

#include <immintrin.h>

namespace vans::kernels {
namespace {

// A __m256d holds two complex numbers as [re0, im0, re1, im1].
inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

struct Scalar {
    __m256d re;
    __m256d im;
};

inline Scalar broadcast(cplx c) {
    return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
}

// Per-lane complex coefficients [c0, c1].
inline Scalar lanes(cplx c0, cplx c1) {
    const __m256d c = _mm256_setr_pd(c0.real(), c0.imag(), c1.real(), c1.imag());
    return {_mm256_movedup_pd(c), _mm256_permute_pd(c, 0b1111)};
}

inline __m256d cmul(__m256d v, const Scalar &c) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(v, c.re, _mm256_mul_pd(swapped, c.im));
}

// acc + v * c
inline __m256d cfma(__m256d acc, __m256d v, const Scalar &c) {
    return _mm256_add_pd(acc, cmul(v, c));
}

void apply_mat2(std::span<cplx> amps, std::size_t mask, const Mat2 &g) {
    const std::size_t dim = amps.size();
    cplx *a = amps.data();
    if (mask == 1) {
        const Scalar left = lanes(g.m[0], g.m[2]);
        const Scalar right = lanes(g.m[1], g.m[3]);
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = load2(a + i);
            const __m256d v0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d v1 = _mm256_permute2f128_pd(v, v, 0x11);
            store2(a + i, cfma(cmul(v0, left), v1, right));
        }
        return;
    }
    const Scalar m0 = broadcast(g.m[0]), m1 = broadcast(g.m[1]);
    const Scalar m2 = broadcast(g.m[2]), m3 = broadcast(g.m[3]);
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t i = base; i < base + mask; i += 2) {
            const __m256d v0 = load2(a + i);
            const __m256d v1 = load2(a + i + mask);
            store2(a + i, cfma(cmul(v0, m0), v1, m1));
            store2(a + i + mask, cfma(cmul(v0, m2), v1, m3));
        }
    }
}

void apply_diag2(std::span<cplx> amps, std::size_t mask, cplx d0, cplx d1) {
    const std::size_t dim = amps.size();
    cplx *a = amps.data();
    if (mask == 1) {
        const Scalar d = lanes(d0, d1);
        for (std::size_t i = 0; i < dim; i += 2) {
            store2(a + i, cmul(load2(a + i), d));
        }
        return;
    }
    const Scalar b0 = broadcast(d0), b1 = broadcast(d1);
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t i = base; i < base + mask; i += 2) {
            store2(a + i, cmul(load2(a + i), b0));
            store2(a + i + mask, cmul(load2(a + i + mask), b1));
        }
    }
}

inline std::size_t insert_zero_bits(std::size_t k, std::size_t lo,
                                    std::size_t hi) {
    k = ((k & ~(lo - 1)) << 1) | (k & (lo - 1));
    return ((k & ~(hi - 1)) << 1) | (k & (hi - 1));
}

void apply_mat4(std::span<cplx> amps, std::size_t mask_a, std::size_t mask_b,
                const Mat4 &g) {
    const std::size_t lo = mask_a < mask_b ? mask_a : mask_b;
    const std::size_t hi = mask_a < mask_b ? mask_b : mask_a;
    if (lo == 1) {
        scalar_kernels().apply_mat4(amps, mask_a, mask_b, g);
        return;
    }
    Scalar m[16];
    for (int r = 0; r < 16; ++r) {
        m[r] = broadcast(g.m[r]);
    }
    cplx *a = amps.data();
    const std::size_t quarter = amps.size() / 4;
    // Bit 0 is free, so consecutive k map to consecutive indices.
    for (std::size_t k = 0; k < quarter; k += 2) {
        const std::size_t i = insert_zero_bits(k, lo, hi);
        const std::size_t idx[4] = {i, i | mask_b, i | mask_a,
                                    i | mask_a | mask_b};
        __m256d v[4];
        for (int r = 0; r < 4; ++r) {
            v[r] = load2(a + idx[r]);
        }
        for (int r = 0; r < 4; ++r) {
            __m256d acc = cmul(v[0], m[4 * r]);
            acc = cfma(acc, v[1], m[4 * r + 1]);
            acc = cfma(acc, v[2], m[4 * r + 2]);
            acc = cfma(acc, v[3], m[4 * r + 3]);
            store2(a + idx[r], acc);
        }
    }
}

void apply_cnot(std::span<cplx> amps, std::size_t cmask, std::size_t tmask) {
    const std::size_t lo = cmask < tmask ? cmask : tmask;
    const std::size_t hi = cmask < tmask ? tmask : cmask;
    if (lo == 1) {
        scalar_kernels().apply_cnot(amps, cmask, tmask);
        return;
    }
    cplx *a = amps.data();
    const std::size_t quarter = amps.size() / 4;
    for (std::size_t k = 0; k < quarter; k += 2) {
        const std::size_t i = insert_zero_bits(k, lo, hi) | cmask;
        const __m256d v0 = load2(a + i);
        const __m256d v1 = load2(a + (i | tmask));
        store2(a + i, v1);
        store2(a + (i | tmask), v0);
    }
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    const std::size_t n = a.size();
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load2(a.data() + i);
        const __m256d vb = load2(b.data() + i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
    }
    // acc_im lanes hold [ar*bi, ai*br, ...]; the imaginary part is even - odd.
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    double re = hsum(acc_re);
    double im = hsum(_mm256_mul_pd(acc_im, sign));
    for (; i < n; ++i) {
        const cplx z = std::conj(a[i]) * b[i];
        re += z.real();
        im += z.imag();
    }
    return {re, im};
}

double norm2(std::span<const cplx> a) {
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(a.data() + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += std::norm(a[i]);
    }
    return s;
}

void scale(std::span<cplx> amps, cplx f) {
    const Scalar c = broadcast(f);
    const std::size_t n = amps.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(amps.data() + i, cmul(load2(amps.data() + i), c));
    }
    for (; i < n; ++i) {
        amps[i] *= f;
    }
}

void axpy(std::span<cplx> y, std::span<const cplx> x, cplx alpha) {
    const Scalar c = broadcast(alpha);
    const std::size_t n = y.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        store2(y.data() + i, cfma(load2(y.data() + i), load2(x.data() + i), c));
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

} // namespace

const KernelSet &avx2_kernel_set() noexcept {
    static const KernelSet set{"avx2", apply_mat2, apply_diag2, apply_mat4,
                               apply_cnot, dot,       norm2,       scale,
                               axpy};
    return set;
}

} // namespace vans::kernels
