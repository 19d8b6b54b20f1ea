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
 * The structural search loop.
 *
 * Each outer iteration proposes one move from the incumbent circuit:
 *
 *     insert -> simplify_structural -> Adam -> simplify (rules 1-6)
 *            -> [Adam again if rule 6 deleted something] -> Metropolis
 *
 * and records it in the trajectory whether or not it is accepted.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/insertion.hpp"
#include "vans/optimizer.hpp"
#include "vans/problem.hpp"
#include "vans/simplification.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vans {

struct VansConfig {
    std::size_t max_outer_iters = 50;
    double beta = 500.0;
    /// Accept proposals whose cost equals the incumbent's.
    bool accept_equal = true;
    InsertionPolicy insertion;
    SimplifyConfig simplify;
    OptimizerConfig optimizer;
    std::uint64_t seed = 0;
    /// Blocks inserted per proposal.
    std::size_t insertions_per_iter = 1;
    /// Draw the initial angles uniformly from [-pi, pi) instead of using the
    /// ones stored in the initial circuit.
    bool randomize_initial = true;
    /// Stop early once the best cost is at or below this value.
    std::optional<double> target_cost;

    void validate() const;
};

enum class MoveKind { Insert, SimplifyOnly };

[[nodiscard]] std::string to_string(MoveKind kind);

struct TrajectoryRecord {
    std::size_t outer_iter = 0;
    /// Cost of the proposal after optimization.
    double cost = 0.0;
    std::size_t n_cnots = 0;
    std::size_t n_params = 0;
    bool accepted = false;
    MoveKind move_kind = MoveKind::Insert;
    /// Accepted although the cost went up.
    bool uphill = false;
    /// The proposal threw and was skipped.
    bool failed = false;
    /// Incumbent cost after the decision.
    double incumbent_cost = 0.0;
};

struct VansResult {
    Circuit best_circuit;
    double best_cost = 0.0;
    /// Cost of the optimized initial circuit (the Metropolis scale C0).
    double initial_cost = 0.0;
    std::vector<TrajectoryRecord> trajectory;
    std::size_t accepted_moves = 0;
};

/// Called after every proposal with the record and the incumbent circuit.
using ProposalObserver =
    std::function<void(const TrajectoryRecord &, const Circuit &)>;

/// Deterministic for a fixed config (including the seed).
[[nodiscard]] VansResult run_vans(const Problem &problem,
                                  const Circuit &initial,
                                  const VansConfig &config,
                                  const ProposalObserver &observer = {});

} // namespace vans
