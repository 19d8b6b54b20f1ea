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
#include "vans/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace vans::kernels {

#if defined(VANS_HAVE_AVX2)
const KernelSet &avx2_kernel_set() noexcept;
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(VANS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelSet *best_available() noexcept {
    if (const KernelSet *k = avx2_kernels()) {
        return k;
    }
    return &scalar_kernels();
}

const KernelSet *initial_selection() noexcept {
    if (const char *env = std::getenv("VANS_KERNELS")) {
        const std::string_view want(env);
        if (want == "scalar") {
            return &scalar_kernels();
        }
        if (want == "avx2" && avx2_kernels() != nullptr) {
            return avx2_kernels();
        }
    }
    return best_available();
}

std::atomic<const KernelSet *> &current() noexcept {
    static std::atomic<const KernelSet *> ptr{initial_selection()};
    return ptr;
}

} // namespace

const KernelSet *avx2_kernels() noexcept {
#if defined(VANS_HAVE_AVX2)
    static const bool ok = cpu_has_avx2();
    return ok ? &avx2_kernel_set() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet &active() noexcept { return *current().load(); }

bool select(std::string_view name) noexcept {
    const KernelSet *k = nullptr;
    if (name == "scalar") {
        k = &scalar_kernels();
    } else if (name == "avx2") {
        k = avx2_kernels();
    } else if (name == "auto") {
        k = best_available();
    }
    if (k == nullptr) {
        return false;
    }
    current().store(k);
    return true;
}

} // namespace vans::kernels
