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
// Internal: circuits lowered to single-parameter Pauli rotations.
#pragma once

#include "vans/circuit.hpp"
#include "vans/kernels.hpp"
#include "vans/state.hpp"

#include <vector>

namespace vans::detail {

enum class PrimKind { RotZ, RotX, RotXX, RotYY, RotZZ, CNOT, Phase };

struct Prim {
    PrimKind kind;
    int a = -1;
    int b = -1;
    /// Parameter slot, or -1 for CNOT.
    std::ptrdiff_t slot = -1;
};

/// Flattens a circuit. General two-qubit gates expand into 15 rotations.
std::vector<Prim> lower(const Circuit &circuit);

/// Applies exp(-i t P / 2) (or exp(i t) for Phase, CNOT ignoring t).
void apply_prim(std::span<cplx> amps, int n_qubits, const Prim &p, double t);

/// Applies the Hermitian generator P of a rotation primitive. For Phase the
/// generator is -2 I so that the same gradient formula applies.
void apply_generator(std::span<cplx> amps, int n_qubits, const Prim &p);

} // namespace vans::detail
