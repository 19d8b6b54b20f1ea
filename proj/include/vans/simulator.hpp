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
 * Exact statevector simulation and adjoint differentiation.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/problem.hpp"
#include "vans/state.hpp"

#include <Eigen/Dense>

#include <vector>

namespace vans {

/// Largest register for which dense unitaries are materialized.
inline constexpr int kMaxDenseQubits = 12;

void apply_circuit_inplace(StateVector &state, const Circuit &circuit);
[[nodiscard]] StateVector apply_circuit(StateVector state,
                                        const Circuit &circuit);

/// Column j is the circuit applied to |j>.
[[nodiscard]] Eigen::MatrixXcd circuit_to_unitary(const Circuit &circuit);

/// Cost of `circuit` on `problem` with the circuit's current parameters.
[[nodiscard]] double evaluate_cost(const Circuit &circuit,
                                   const Problem &problem);

struct CostGradient {
    double cost = 0.0;
    std::vector<double> gradient;
};

/**
 * Cost and exact gradient with respect to every parameter slot.
 *
 * One forward pass per input state, then a reverse sweep that undoes each
 * gate on both the state and the adjoint vector, picking up
 * Im <lambda|P|phi> for every rotation exp(-i t P / 2).
 */
[[nodiscard]] CostGradient cost_and_gradient(const Circuit &circuit,
                                             const Problem &problem);

[[nodiscard]] std::vector<double> cost_gradient(const Circuit &circuit,
                                                const Problem &problem);

} // namespace vans
