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
#include "vans/vans.hpp"

#include "vans/error.hpp"
#include "vans/simulator.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace vans {

void VansConfig::validate() const {
    if (!(beta > 0.0)) {
        throw ConfigError("beta must be positive");
    }
    if (insertions_per_iter < 1) {
        throw ConfigError("insertions_per_iter must be at least 1");
    }
    if (simplify.threshold < 0.0) {
        throw ConfigError("simplify.threshold must be non-negative");
    }
    optimizer.validate();
    insertion.validate();
}

std::string to_string(MoveKind kind) {
    return kind == MoveKind::Insert ? "insert" : "simplify-only";
}

namespace {

struct Candidate {
    Circuit circuit;
    double cost;
};

Candidate optimized(Circuit c, const Problem &problem, const OptimizerConfig &opt) {
    const OptimizeResult r = optimize_continuous(c, problem, opt);
    c.set_params(r.params);
    return {std::move(c), r.cost};
}

Candidate propose(const Circuit &incumbent, const Problem &problem,
                  const VansConfig &config, Rng &rng) {
    const bool zero_input = starts_from_zero_state(problem);
    Circuit c = incumbent;
    for (std::size_t k = 0; k < config.insertions_per_iter; ++k) {
        c = insert(c, config.insertion, rng);
    }
    c = simplify_structural(c, zero_input).first;
    Candidate cand = optimized(std::move(c), problem, config.optimizer);

    // Simplification again, now with rule 6 on the trained angles.
    auto [pruned, report] = simplify(cand.circuit, problem, config.simplify);
    if (report.count(Rule::CostAware) > 0) {
        cand = optimized(std::move(pruned), problem, config.optimizer);
        cand.circuit = simplify_structural(cand.circuit, zero_input).first;
    } else {
        cand.circuit = std::move(pruned);
    }
    cand.cost = evaluate_cost(cand.circuit, problem);
    if (!std::isfinite(cand.cost)) {
        throw OptimizerDivergenceError("non-finite proposal cost");
    }
    return cand;
}

} // namespace

VansResult run_vans(const Problem &problem, const Circuit &initial,
                    const VansConfig &config, const ProposalObserver &observer) {
    config.validate();
    validate_problem(problem);
    initial.validate();
    if (initial.n_qubits() != problem_qubits(problem)) {
        throw DimensionMismatchError("initial circuit has " +
                                     std::to_string(initial.n_qubits()) +
                                     " qubits, problem has " +
                                     std::to_string(problem_qubits(problem)));
    }

    Rng rng(config.seed);
    Circuit start = initial;
    if (config.randomize_initial) {
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        std::vector<double> p(start.params().size());
        for (double &x : p) {
            x = angle(rng);
        }
        start.set_params(p);
    }
    Candidate incumbent = optimized(std::move(start), problem, config.optimizer);

    VansResult result{incumbent.circuit, incumbent.cost, incumbent.cost, {}, 0};
    const auto reached = [&] {
        return config.target_cost && result.best_cost <= *config.target_cost;
    };

    for (std::size_t iter = 1; iter <= config.max_outer_iters && !reached(); ++iter) {
        TrajectoryRecord rec;
        rec.outer_iter = iter;
        try {
            Candidate cand = propose(incumbent.circuit, problem, config, rng);
            rec.cost = cand.cost;
            rec.n_cnots = count_cnots(cand.circuit);
            rec.n_params = count_params(cand.circuit);
            rec.move_kind = cand.circuit.size() > incumbent.circuit.size()
                                ? MoveKind::Insert
                                : MoveKind::SimplifyOnly;
            const bool tie = cand.cost == incumbent.cost;
            rec.accepted = tie ? config.accept_equal
                               : metropolis_accept(cand.cost, incumbent.cost,
                                                   result.initial_cost, config.beta, rng);
            if (rec.accepted) {
                rec.uphill = cand.cost > incumbent.cost;
                incumbent = std::move(cand);
                ++result.accepted_moves;
                if (incumbent.cost < result.best_cost) {
                    result.best_cost = incumbent.cost;
                    result.best_circuit = incumbent.circuit;
                }
            }
        } catch (const OptimizerDivergenceError &) {
            throw;
        } catch (const Error &) {
            rec.failed = true;
            rec.cost = incumbent.cost;
            rec.n_cnots = count_cnots(incumbent.circuit);
            rec.n_params = count_params(incumbent.circuit);
        }
        rec.incumbent_cost = incumbent.cost;
        result.trajectory.push_back(rec);
        if (observer) {
            observer(rec, incumbent.circuit);
        }
    }
    return result;
}

} // namespace vans
