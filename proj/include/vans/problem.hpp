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
#pragma once

#include "vans/pauli.hpp"
#include "vans/state.hpp"

#include <variant>
#include <vector>

namespace vans {

/// Minimize <0|U^dag H U|0>.
struct VqeProblem {
    PauliSum hamiltonian;
};

enum class CompressionCost {
    /// All trash qubits measured together.
    Global,
    /// Trash qubits measured one at a time and averaged.
    Local,
};

/// Drive the trailing `n_trash` qubits of every training state to |0>.
struct AutoencoderProblem {
    std::vector<double> weights;
    std::vector<StateVector> states;
    int n_trash = 1;
    CompressionCost variant = CompressionCost::Local;
};

/// Match V|in_j> to target_j for every pair; phase sensitive.
struct CompilationProblem {
    std::vector<StateVector> inputs;
    std::vector<StateVector> targets;
    int n_qubits = 1;
};

using Problem = std::variant<VqeProblem, AutoencoderProblem, CompilationProblem>;

[[nodiscard]] int problem_qubits(const Problem &problem);

/// True when the circuit always starts from |0...0>, which is what the
/// leading-gate rewrite rules rely on.
[[nodiscard]] bool starts_from_zero_state(const Problem &problem);

/// Throws InvalidProblemError when a problem invariant is broken.
void validate_problem(const Problem &problem);

} // namespace vans
