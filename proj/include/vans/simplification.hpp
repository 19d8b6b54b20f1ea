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
 * Circuit simplification.
 *
 * Structural rules (purely classical, exact up to a global phase):
 *   commute  RotZ on a CNOT control / RotX on a CNOT target moves left
 *   rule 1   CNOT whose control wire is still |0> is dropped
 *   rule 2   RotZ acting first on its wire is dropped
 *   rule 3   adjacent identical CNOTs cancel
 *   rule 4   adjacent same-axis rotations on a wire merge
 *   rule 5   runs of four or more rotations on a wire fuse to an Euler triplet
 * Rules 1 and 2 assume the circuit acts on |0...0> and are disabled
 * otherwise. Rule 6 deletes gates whose removal barely changes the cost and
 * needs cost evaluations.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/problem.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>

namespace vans {

enum class Rule : std::size_t {
    Commute,
    LeadingCnot,
    LeadingRotZ,
    CnotPair,
    MergeSameAxis,
    EulerFusion,
    ZeroAngle,
    CostAware,
    kCount,
};

[[nodiscard]] std::string rule_name(Rule rule);

struct RewriteReport {
    std::size_t gates_removed = 0;
    std::size_t rotations_fused = 0;
    std::size_t passes = 0;
    std::array<std::size_t, static_cast<std::size_t>(Rule::kCount)> rule_counts{};

    [[nodiscard]] std::size_t count(Rule r) const {
        return rule_counts[static_cast<std::size_t>(r)];
    }
    void bump(Rule r, std::size_t by = 1) {
        rule_counts[static_cast<std::size_t>(r)] += by;
    }
    RewriteReport &operator+=(const RewriteReport &other);
    [[nodiscard]] bool empty() const;
};

/// Applies the two commutation rules until no rotation can move further
/// left. Throws vans::Error on circuits with general two-qubit gates.
[[nodiscard]] Circuit canonicalize(const Circuit &circuit);

/// Fixed point of canonicalization and rules 1-5.
[[nodiscard]] std::pair<Circuit, RewriteReport>
simplify_structural(const Circuit &circuit, bool zero_input = true);

enum class CandidateOrder {
    /// Ascending largest |dC/dtheta| of the gate's parameters; CNOTs last.
    GradientMagnitude,
    /// Gate order.
    Position,
};

struct SimplifyConfig {
    /// Relative cost increase tolerated by rule 6 (absolute when |C| < 1e-6).
    double threshold = 1e-4;
    /// Tentative deletions per call.
    std::size_t max_candidates = 10;
    CandidateOrder order = CandidateOrder::GradientMagnitude;
    bool enable_cost_aware = true;
};

/// Rule 6. Each tentative deletion costs one cost evaluation; a kept
/// deletion is followed by simplify_structural.
[[nodiscard]] std::pair<Circuit, RewriteReport>
cost_aware_removal(const Circuit &circuit, const Problem &problem,
                   const SimplifyConfig &config);

/// simplify_structural, then cost_aware_removal, then simplify_structural.
[[nodiscard]] std::pair<Circuit, RewriteReport>
simplify(const Circuit &circuit, const Problem &problem,
         const SimplifyConfig &config);

} // namespace vans
