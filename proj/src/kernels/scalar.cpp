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
// Reference kernels. Plain loops, no intrinsics.
#include "vans/kernels.hpp"

namespace vans::kernels {
namespace {

void apply_mat2(std::span<cplx> amps, std::size_t mask, const Mat2 &g) {
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t i = base; i < base + mask; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i + mask];
            amps[i] = g.m[0] * a0 + g.m[1] * a1;
            amps[i + mask] = g.m[2] * a0 + g.m[3] * a1;
        }
    }
}

void apply_diag2(std::span<cplx> amps, std::size_t mask, cplx d0, cplx d1) {
    const std::size_t dim = amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] *= (i & mask) ? d1 : d0;
    }
}

void apply_mat4(std::span<cplx> amps, std::size_t mask_a, std::size_t mask_b,
                const Mat4 &g) {
    const std::size_t dim = amps.size();
    const std::size_t lo = mask_a < mask_b ? mask_a : mask_b;
    const std::size_t hi = mask_a < mask_b ? mask_b : mask_a;
    for (std::size_t k = 0; k < dim / 4; ++k) {
        // Insert zero bits at the two qubit positions.
        std::size_t i = k;
        i = ((i & ~(lo - 1)) << 1) | (i & (lo - 1));
        i = ((i & ~(hi - 1)) << 1) | (i & (hi - 1));
        const std::size_t idx[4] = {i, i | mask_b, i | mask_a,
                                    i | mask_a | mask_b};
        cplx v[4];
        for (int r = 0; r < 4; ++r) {
            v[r] = amps[idx[r]];
        }
        for (int r = 0; r < 4; ++r) {
            amps[idx[r]] = g.m[4 * r] * v[0] + g.m[4 * r + 1] * v[1] +
                           g.m[4 * r + 2] * v[2] + g.m[4 * r + 3] * v[3];
        }
    }
}

void apply_cnot(std::span<cplx> amps, std::size_t cmask, std::size_t tmask) {
    const std::size_t dim = amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

// Two interleaved partial sums; the order is fixed so results are
// reproducible.
cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    double re[2] = {0.0, 0.0};
    double im[2] = {0.0, 0.0};
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re[i & 1] += ar * br + ai * bi;
        im[i & 1] += ar * bi - ai * br;
    }
    return {re[0] + re[1], im[0] + im[1]};
}

double norm2(std::span<const cplx> a) {
    double s[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s[i & 1] += std::norm(a[i]);
    }
    return s[0] + s[1];
}

void scale(std::span<cplx> amps, cplx f) {
    for (cplx &a : amps) {
        a *= f;
    }
}

void axpy(std::span<cplx> y, std::span<const cplx> x, cplx alpha) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

} // namespace

const KernelSet &scalar_kernels() noexcept {
    static const KernelSet set{"scalar", apply_mat2, apply_diag2, apply_mat4,
                               apply_cnot,  dot,        norm2,       scale,
                               axpy};
    return set;
}

} // namespace vans::kernels
