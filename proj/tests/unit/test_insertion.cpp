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
#include "vans/insertion.hpp"
#include "vans/problems.hpp"
#include "vans/simulator.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

namespace vans {
namespace {

using std::numbers::pi;

double op_norm_distance_to_identity(const oracle::Mat &u) {
    const oracle::Mat d = u - oracle::Mat::Identity(u.rows(), u.cols());
    Eigen::JacobiSVD<oracle::Mat> svd(d);
    return svd.singularValues()(0);
}

TEST(Dictionary, EveryBlockIsIdentityAtZero) {
    for (const Dictionary &dict : {standard_dictionary(), compilation_dictionary(1), compilation_dictionary(3)}) {
        for (const DictionaryBlock &b : dict) {
            for (int n = b.arity; n <= 4; ++n) {
                for (int a = 0; a < n; ++a) {
                    for (int c = 0; c < n; ++c) {
                        if (b.arity == 1 && c > 0) {
                            break;
                        }
                        if (b.arity == 2 && a == c) {
                            continue;
                        }
                        const std::vector<int> q = b.arity == 1 ? std::vector<int>{a} : std::vector<int>{a, c};
                        const Circuit inst = instantiate(b, n, q);
                        EXPECT_EQ(count_params(inst), static_cast<std::size_t>(b.n_angles()));
                        EXPECT_LT(op_norm_distance_to_identity(oracle::unitary(inst)), 1e-12) << b.name;
                    }
                }
            }
        }
    }
}

TEST(Dictionary, OneQubitBlockExamples) {
    EXPECT_LT(op_norm_distance_to_identity(oracle::unitary(build_one_qubit_block(1, 0))), 1e-12);

    const double pi_angles[] = {pi, 0.0, 0.0};
    oracle::Mat expect = oracle::Mat::Zero(2, 2);
    expect(0, 0) = std::exp(oracle::cplx(0, -pi / 2));
    expect(1, 1) = std::exp(oracle::cplx(0, pi / 2));
    EXPECT_LT((circuit_to_unitary(build_one_qubit_block(1, 0, pi_angles)) - expect).cwiseAbs().maxCoeff(), 1e-15);

    const double t[] = {0.3, 0.7, -0.2};
    const oracle::Mat product = oracle::rotation("Z", -0.2) * oracle::rotation("X", 0.7) * oracle::rotation("Z", 0.3);
    EXPECT_LT((circuit_to_unitary(build_one_qubit_block(1, 0, t)) - product).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Dictionary, TwoQubitBlockExamples) {
    EXPECT_LT(op_norm_distance_to_identity(oracle::unitary(build_two_qubit_block(2, 0, 1))), 1e-12);
    EXPECT_LT(op_norm_distance_to_identity(oracle::unitary(build_two_qubit_block(2, 1, 0))), 1e-12);

    const double t[] = {0.1, 0.2, 0.3, 0.4};
    const oracle::Mat c = oracle::cnot(2, 0, 1);
    const oracle::Mat product = c * oracle::rotation("IX", 0.4) * oracle::rotation("IZ", 0.3) *
                                oracle::rotation("XI", 0.2) * oracle::rotation("ZI", 0.1) * c;
    EXPECT_LT((circuit_to_unitary(build_two_qubit_block(2, 0, 1, t)) - product).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW((void)build_two_qubit_block(2, 1, 1), InvalidBlockError);
}

TEST(Dictionary, KakBlockIsGeneralAndZeroIdentity) {
    const Dictionary d = compilation_dictionary(2);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].n_angles(), 15);
    gen::Rng rng(1);
    std::vector<double> t(15);
    for (double &x : t) {
        x = gen::angle(rng);
    }
    Circuit c(2);
    c.kak(0, 1, t);
    EXPECT_LT((circuit_to_unitary(c) - oracle::kak(2, 0, 1, t.data())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ChooseBlock, UniformFrequencies) {
    InsertionPolicy p;
    Rng rng(2);
    int two = 0;
    for (int i = 0; i < 10000; ++i) {
        two += choose_block(p, rng) == 1 ? 1 : 0;
    }
    EXPECT_NEAR(two / 1e4, 0.5, 0.02);
}

TEST(ChooseBlock, Weighted) {
    InsertionPolicy p;
    Rng rng(3);
    p.block_weights = {1.0, 0.0};
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(choose_block(p, rng), 0u);
    }
    p.block_weights = {0.25, 0.75};
    int two = 0;
    for (int i = 0; i < 10000; ++i) {
        two += choose_block(p, rng) == 1 ? 1 : 0;
    }
    EXPECT_NEAR(two / 1e4, 0.75, 0.02);
    p.dictionary.clear();
    EXPECT_THROW((void)choose_block(p, rng), Error);
}

TEST(ChoosePlacement, EmptyCircuitIsUniformOverPairs) {
    const Circuit c(4);
    InsertionPolicy p;
    Rng rng(4);
    std::map<std::pair<int, int>, int> hits;
    for (int i = 0; i < 10000; ++i) {
        const Placement pl = choose_placement(c, two_qubit_block(), p, rng);
        ++hits[{std::min(pl.qubits[0], pl.qubits[1]), std::max(pl.qubits[0], pl.qubits[1])}];
        EXPECT_EQ(pl.position, 0u);
    }
    ASSERT_EQ(hits.size(), 6u);
    for (const auto &[pair, k] : hits) {
        EXPECT_NEAR(k / 1e4, 1.0 / 6.0, 0.02);
    }
}

TEST(ChoosePlacement, PenalizesConnectedPairs) {
    Circuit c(4);
    for (int k = 0; k < 5; ++k) {
        c.cnot(0, 1);
    }
    InsertionPolicy p;
    Rng rng(5);
    // Weights: 1/6 for (0,1), 1 for the five others.
    const double total = 5.0 + 1.0 / 6.0;
    int hits01 = 0;
    for (int i = 0; i < 10000; ++i) {
        const Placement pl = choose_placement(c, two_qubit_block(), p, rng);
        hits01 += std::min(pl.qubits[0], pl.qubits[1]) == 0 && std::max(pl.qubits[0], pl.qubits[1]) == 1 ? 1 : 0;
    }
    EXPECT_NEAR(hits01 / 1e4, (1.0 / 6.0) / total, 0.02);
    const auto w = pair_weights(c, 1.0);
    EXPECT_DOUBLE_EQ(w[0], 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(w[1], 1.0);
}

TEST(ChoosePlacement, TwoQubitsHaveOnePair) {
    InsertionPolicy p;
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        const Placement pl = choose_placement(Circuit(2), two_qubit_block(), p, rng);
        EXPECT_EQ(std::min(pl.qubits[0], pl.qubits[1]), 0);
        EXPECT_EQ(std::max(pl.qubits[0], pl.qubits[1]), 1);
    }
    EXPECT_THROW((void)choose_placement(Circuit(1), two_qubit_block(), p, rng), InvalidBlockError);
}

TEST(Insert, ZeroEpsilonKeepsCost) {
    const PauliSum h = tfim_hamiltonian(4, 1.0, 1.0);
    InsertionPolicy p;
    p.epsilon_init = 0.0;
    gen::Rng seeds(7);
    Circuit c = build_hea(4, 1);
    gen::randomize(c, seeds);
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        const Circuit next = insert(c, p, rng);
        EXPECT_NEAR(vqe_cost(next, h), vqe_cost(c, h), 1e-10);
        c = next;
    }
}

TEST(Insert, SmallEpsilonBoundedChange) {
    const PauliSum h = tfim_hamiltonian(4, 1.0, 1.0);
    InsertionPolicy p;
    p.epsilon_init = 0.01;
    const Circuit c = build_product_ansatz(4);
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        Rng rng(s);
        worst = std::max(worst, std::abs(vqe_cost(insert(c, p, rng), h) - vqe_cost(c, h)));
    }
    EXPECT_LE(worst, 0.1);
}

TEST(Insert, AppendsAndPreservesPrefix) {
    gen::Rng g(9);
    InsertionPolicy p;
    p.epsilon_init = 0.3;
    for (int trial = 0; trial < 100; ++trial) {
        const Circuit c = gen::circuit(g, {.min_qubits = 2, .max_qubits = 5});
        Rng rng(static_cast<std::uint64_t>(trial));
        const Circuit next = insert(c, p, rng);
        const std::size_t added = next.size() - c.size();
        EXPECT_TRUE(added == 3 || added == 6);
        EXPECT_EQ(count_params(next) - count_params(c), added == 3 ? 3u : 4u);
        for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_EQ(next.gate(i), c.gate(i));
        }
        for (std::size_t k = 0; k < c.params().size(); ++k) {
            EXPECT_EQ(next.params()[k], c.params()[k]);
        }
    }
}

TEST(Insert, SeededSequenceIsReproducible) {
    InsertionPolicy p;
    p.position = PositionMode::Anywhere;
    auto run = [&] {
        Rng rng(10);
        Circuit c = build_product_ansatz(3);
        for (int i = 0; i < 30; ++i) {
            c = insert(c, p, rng);
        }
        return c;
    };
    EXPECT_EQ(run(), run());
}

TEST(Insert, AnywherePreservesZeroEpsilonCost) {
    const Problem prob = build_compilation_training_set(3, 8, 1);
    InsertionPolicy p;
    p.epsilon_init = 0.0;
    p.position = PositionMode::Anywhere;
    gen::Rng g(11);
    Circuit c = gen::circuit(g, {.min_qubits = 3, .max_qubits = 3, .with_kak = true});
    const double before = evaluate_cost(c, prob);
    Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        c = insert(c, p, rng);
    }
    EXPECT_NEAR(evaluate_cost(c, prob), before, 1e-10);
}

TEST(InsertionPolicy, Validation) {
    InsertionPolicy p;
    p.epsilon_init = -1.0;
    EXPECT_THROW(p.validate(), Error);
    p = {};
    p.block_weights = {0.5, 0.6};
    EXPECT_THROW(p.validate(), Error);
    p = {};
    p.connectivity_bias = 0.0;
    EXPECT_THROW(p.validate(), Error);
}

} // namespace
} // namespace vans
