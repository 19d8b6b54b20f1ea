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
 * Continuous optimization (Adam) and the Metropolis acceptance test.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/insertion.hpp"
#include "vans/problem.hpp"

#include <cstddef>
#include <vector>

namespace vans {

struct OptimizerConfig {
    double learning_rate = 0.05;
    std::size_t max_steps = 2000;
    /// Stop when |dC| < convergence_tol * |C| ...
    double convergence_tol = 1e-7;
    /// ... for this many consecutive steps.
    std::size_t patience = 25;

    void validate() const;
};

struct OptimizeResult {
    std::vector<double> params;
    double cost = 0.0;
    std::size_t steps = 0;
};

/**
 * Adam (beta1 = 0.9, beta2 = 0.999, eps = 1e-8) on the exact gradient,
 * starting from the circuit's current parameters. Returns the best
 * parameters seen, so the reported cost never exceeds the initial one.
 * Throws OptimizerDivergenceError on a non-finite cost or gradient.
 */
[[nodiscard]] OptimizeResult optimize_continuous(const Circuit &circuit,
                                                 const Problem &problem,
                                                 const OptimizerConfig &config);

/// Always accepts dC <= 0; otherwise accepts with probability
/// exp(-beta dC / |C0|). Draws from `rng` only for uphill moves.
[[nodiscard]] bool metropolis_accept(double new_cost, double old_cost,
                                     double initial_cost, double beta, Rng &rng);

} // namespace vans
