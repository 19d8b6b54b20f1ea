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
/**
 * @file
 * Amplitude-level kernels used by the statevector simulator.
 *
 * Every kernel exists as a portable scalar reference and, on x86-64 builds,
 * as an AVX2/FMA variant. The variant is picked once at runtime from CPUID;
 * `VANS_KERNELS=scalar|avx2` overrides the choice. Both variants traverse
 * amplitudes and reduce sums in a fixed order, so a given variant is
 * bit-reproducible run to run.
 *
 * Masks are single-bit basis-index masks (`1 << (n - 1 - qubit)`).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace vans::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix.
struct Mat2 {
    cplx m[4];
};

/// Row-major 4x4 matrix; local index is 2 * bit(first) + bit(second).
struct Mat4 {
    cplx m[16];
};

struct KernelSet {
    const char *name;

    /// amps <- (M on the qubit of `mask`) amps
    void (*apply_mat2)(std::span<cplx> amps, std::size_t mask, const Mat2 &m);
    /// Diagonal single-qubit gate diag(d0, d1).
    void (*apply_diag2)(std::span<cplx> amps, std::size_t mask, cplx d0,
                        cplx d1);
    /// Two-qubit gate; `mask_a` selects the high bit of the local index.
    void (*apply_mat4)(std::span<cplx> amps, std::size_t mask_a,
                       std::size_t mask_b, const Mat4 &m);
    void (*apply_cnot)(std::span<cplx> amps, std::size_t control_mask,
                       std::size_t target_mask);
    /// sum_i conj(a_i) b_i
    cplx (*dot)(std::span<const cplx> a, std::span<const cplx> b);
    /// sum_i |a_i|^2
    double (*norm2)(std::span<const cplx> a);
    void (*scale)(std::span<cplx> amps, cplx factor);
    /// y <- y + alpha x
    void (*axpy)(std::span<cplx> y, std::span<const cplx> x, cplx alpha);
};

const KernelSet &scalar_kernels() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelSet *avx2_kernels() noexcept;

/// The variant used by the simulator.
const KernelSet &active() noexcept;

/// Forces a variant by name ("scalar", "avx2" or "auto"). Returns false when
/// the requested variant is unavailable; the selection is then unchanged.
bool select(std::string_view name) noexcept;

} // namespace vans::kernels
