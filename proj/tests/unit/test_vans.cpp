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
#include "vans/error.hpp"
#include "vans/problems.hpp"
#include "vans/simulator.hpp"
#include "vans/vans.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace vans {
namespace {

VansConfig small_config(std::uint64_t seed, std::size_t iters) {
    VansConfig cfg;
    cfg.seed = seed;
    cfg.max_outer_iters = iters;
    cfg.insertion.epsilon_init = 0.3;
    cfg.optimizer.max_steps = 300;
    return cfg;
}

TEST(Vans, ZeroIterationsReturnsOptimizedStart) {
    const Problem p = VqeProblem{tfim_hamiltonian(3, 1.0, 1.0)};
    const VansResult r = run_vans(p, build_product_ansatz(3), small_config(1, 0));
    EXPECT_TRUE(r.trajectory.empty());
    EXPECT_EQ(r.accepted_moves, 0u);
    EXPECT_EQ(r.best_cost, r.initial_cost);
    EXPECT_NEAR(evaluate_cost(r.best_circuit, p), r.best_cost, 1e-12);
    // Mean-field optimum on the ring: with <Z> = s on every site the energy is
    // -n J (1 - s^2) - n g s, minimised at s = g / 2J, giving -n (J + g^2 / 4J).
    EXPECT_NEAR(r.best_cost, -3.0 * (1.0 + 0.25), 1e-4);
}

TEST(Vans, SolvesSmallTfim) {
    const PauliSum h = tfim_hamiltonian(3, 1.0, 1.0);
    const double e0 = exact_ground(h).ground_energy;
    double best = 0.0;
    for (std::uint64_t s = 0; s < 3; ++s) {
        best = std::min(best, run_vans(VqeProblem{h}, build_product_ansatz(3), small_config(s, 25)).best_cost);
    }
    EXPECT_LT(std::abs((best - e0) / e0), 1e-5);
}

TEST(Vans, TrajectoryInvariants) {
    const Problem p = VqeProblem{tfim_hamiltonian(4, 1.0, 1.0)};
    std::vector<std::uint64_t> hashes;
    VansConfig cfg = small_config(7, 15);
    cfg.beta = 5.0; // hot enough to see uphill moves now and then
    const Circuit start = build_product_ansatz(4);
    const VansResult r = run_vans(p, start, cfg, [&](const TrajectoryRecord &, const Circuit &inc) {
        hashes.push_back(inc.structural_hash());
    });
    ASSERT_EQ(r.trajectory.size(), 15u);
    ASSERT_EQ(hashes.size(), 15u);
    double incumbent = r.initial_cost;
    double best = r.initial_cost;
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
        const TrajectoryRecord &t = r.trajectory[i];
        EXPECT_EQ(t.outer_iter, i + 1);
        if (t.accepted) {
            ++accepted;
            EXPECT_EQ(t.incumbent_cost, t.cost);
            if (!t.uphill) {
                EXPECT_LE(t.incumbent_cost, incumbent);
            }
        } else {
            EXPECT_EQ(t.incumbent_cost, incumbent);
            if (i > 0) {
                EXPECT_EQ(hashes[i], hashes[i - 1]);
            }
        }
        incumbent = t.incumbent_cost;
        best = std::min(best, incumbent);
    }
    EXPECT_EQ(accepted, r.accepted_moves);
    EXPECT_EQ(best, r.best_cost);
    EXPECT_NEAR(evaluate_cost(r.best_circuit, p), r.best_cost, 1e-12);
}

TEST(Vans, FixedSeedIsBitIdentical) {
    const Problem p = VqeProblem{xxz_hamiltonian(4, 0.5, 1.0)};
    const VansResult a = run_vans(p, build_product_ansatz(4), small_config(3, 8));
    const VansResult b = run_vans(p, build_product_ansatz(4), small_config(3, 8));
    ASSERT_EQ(a.trajectory.size(), b.trajectory.size());
    for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
        EXPECT_EQ(a.trajectory[i].cost, b.trajectory[i].cost);
        EXPECT_EQ(a.trajectory[i].accepted, b.trajectory[i].accepted);
        EXPECT_EQ(a.trajectory[i].n_params, b.trajectory[i].n_params);
    }
    EXPECT_EQ(a.best_circuit, b.best_circuit);
    EXPECT_EQ(a.best_cost, b.best_cost);
    const VansResult c = run_vans(p, build_product_ansatz(4), small_config(4, 8));
    EXPECT_NE(a.best_circuit.structural_hash(), c.best_circuit.structural_hash());
}

TEST(Vans, GrowsStructuresOutsideTheDictionary) {
    const Problem p = VqeProblem{tfim_hamiltonian(3, 1.0, 1.0)};
    const VansResult r = run_vans(p, build_product_ansatz(3), small_config(0, 20));
    // A single block has at most two CNOTs on one pair; the found circuit
    // entangles more than one pair.
    std::set<std::pair<int, int>> pairs;
    for (const Gate &g : r.best_circuit.gates()) {
        if (g.kind == GateKind::CNOT) {
            pairs.insert({std::min(g.qubits[0], g.qubits[1]), std::max(g.qubits[0], g.qubits[1])});
        }
    }
    EXPECT_GE(pairs.size(), 2u) << to_text(r.best_circuit);
}

TEST(Vans, TargetCostStopsEarly) {
    const PauliSum h = tfim_hamiltonian(3, 1.0, 1.0);
    VansConfig cfg = small_config(0, 50);
    cfg.target_cost = -3.0 + 1e-6; // the product state already gets there
    const VansResult r = run_vans(VqeProblem{h}, build_product_ansatz(3), cfg);
    EXPECT_TRUE(r.trajectory.empty());
}

TEST(Vans, MoveKindReflectsGrowth) {
    const Problem p = VqeProblem{tfim_hamiltonian(3, 1.0, 1.0)};
    const VansResult r = run_vans(p, build_product_ansatz(3), small_config(2, 10));
    EXPECT_EQ(to_string(MoveKind::Insert), "insert");
    EXPECT_EQ(to_string(MoveKind::SimplifyOnly), "simplify-only");
    bool saw_insert = false;
    for (const auto &t : r.trajectory) {
        saw_insert = saw_insert || t.move_kind == MoveKind::Insert;
    }
    EXPECT_TRUE(saw_insert);
}

TEST(Vans, WorksForCompilation) {
    const Problem p = build_compilation_training_set(qft_unitary(1), 2, 5);
    VansConfig cfg = small_config(0, 10);
    cfg.insertion.dictionary = compilation_dictionary(1);
    cfg.target_cost = 1e-10;
    Circuit start = build_product_ansatz(1);
    start.phase(0.0);
    const VansResult r = run_vans(p, start, cfg);
    EXPECT_LT(diagnostic_unitary_distance(r.best_circuit, qft_unitary(1)), 1e-10);
}

TEST(Vans, RejectsMismatchedStart) {
    const Problem p = VqeProblem{tfim_hamiltonian(3, 1.0, 1.0)};
    EXPECT_THROW((void)run_vans(p, build_product_ansatz(2), small_config(0, 1)), DimensionMismatchError);
    VansConfig bad = small_config(0, 1);
    bad.beta = 0.0;
    EXPECT_THROW((void)run_vans(p, build_product_ansatz(3), bad), ConfigError);
}

} // namespace
} // namespace vans
