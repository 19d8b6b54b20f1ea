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
#include "vans/pauli.hpp"
#include "vans/problems.hpp"
#include "vans/simulator.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

namespace vans {
namespace {

using std::numbers::pi;

TEST(Simulator, EmptyCircuitIsIdentity) {
    gen::Rng rng(1);
    const StateVector s = gen::state(rng, 3);
    EXPECT_EQ(apply_circuit(s, Circuit(3)), s);
    const auto u = circuit_to_unitary(Circuit(3));
    EXPECT_TRUE(u.isApprox(Eigen::MatrixXcd::Identity(8, 8)));
}

TEST(Simulator, CnotTruthTable) {
    Circuit c(2);
    c.cnot(0, 1);
    // |10> has index 2 with qubit 0 as the high bit.
    const StateVector out = apply_circuit(StateVector::basis(2, 2), c);
    EXPECT_EQ(out, StateVector::basis(2, 3));
    Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(4, 4);
    perm(0, 0) = perm(1, 1) = perm(3, 2) = perm(2, 3) = 1;
    EXPECT_EQ(circuit_to_unitary(c), perm);
}

TEST(Simulator, HeaMatchesDenseOracle) {
    gen::Rng rng(2);
    Circuit c = build_hea(3, 2);
    gen::randomize(c, rng);
    const oracle::Vec expect = oracle::unitary(c).col(0);
    const oracle::Vec got = oracle::to_vec(apply_circuit(StateVector(3), c));
    EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Simulator, RandomCircuitsMatchDenseOracle) {
    gen::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c = gen::circuit(rng, {.max_qubits = 5, .max_gates = 30, .with_kak = true});
        if (trial % 3 == 0) {
            c.phase(gen::angle(rng));
        }
        const StateVector in = gen::state(rng, c.n_qubits());
        const oracle::Vec expect = oracle::unitary(c) * oracle::to_vec(in);
        const StateVector out = apply_circuit(in, c);
        EXPECT_LT((oracle::to_vec(out) - expect).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    }
}

TEST(Simulator, UnitaryColumnsAreCircuitImages) {
    gen::Rng rng(4);
    const Circuit c = gen::circuit(rng, {.min_qubits = 3, .max_qubits = 3, .with_kak = true});
    const Eigen::MatrixXcd u = circuit_to_unitary(c);
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-10);
    for (std::size_t j = 0; j < 8; ++j) {
        const StateVector col = apply_circuit(StateVector::basis(3, j), c);
        for (std::size_t i = 0; i < 8; ++i) {
            EXPECT_EQ(u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), col[i]);
        }
    }
}

TEST(Simulator, InverseRestoresState) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = gen::circuit(rng, {.with_kak = true});
        const StateVector in = gen::state(rng, c.n_qubits());
        const StateVector back = apply_circuit(apply_circuit(in, c), c.inverse());
        EXPECT_LT((oracle::to_vec(back) - oracle::to_vec(in)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Simulator, QubitCountMismatchThrows) {
    EXPECT_THROW((void)apply_circuit(StateVector(2), Circuit(3)), DimensionMismatchError);
    EXPECT_THROW((void)circuit_to_unitary(Circuit(13)), TooLargeError);
}

TEST(Simulator, ExpectationBasics) {
    PauliSum z(1);
    z.add(1.0, "Z");
    PauliSum x(1);
    x.add(1.0, "X");
    EXPECT_DOUBLE_EQ(expectation(StateVector(1), z), 1.0);
    EXPECT_DOUBLE_EQ(expectation(StateVector(1), x), 0.0);
    EXPECT_THROW((void)expectation(StateVector(2), z), DimensionMismatchError);
}

TEST(Simulator, ExpectationMatchesQuadraticForm) {
    gen::Rng rng(6);
    const PauliSum h = tfim_hamiltonian(4, 1.0, 1.0);
    const oracle::Mat dense = oracle::dense(h);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector s = gen::state(rng, 4);
        const oracle::Vec v = oracle::to_vec(s);
        const oracle::cplx e = v.dot(dense * v);
        EXPECT_NEAR(expectation(s, h), e.real(), 1e-10);
        EXPECT_LT(std::abs(e.imag()), 1e-10);
    }
    // Arbitrary words, including Y.
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + gen::index(rng, 5);
        const PauliSum g = gen::pauli_sum(rng, n, 6);
        const StateVector s = gen::state(rng, n);
        const oracle::Vec v = oracle::to_vec(s);
        EXPECT_NEAR(expectation(s, g), v.dot(oracle::dense(g) * v).real(), 1e-10);
        EXPECT_LT((g.to_dense() - oracle::dense(g)).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(Simulator, FidelityExamples) {
    gen::Rng rng(7);
    const StateVector psi = gen::state(rng, 3);
    EXPECT_NEAR(fidelity(psi, psi), 1.0, 1e-14);
    EXPECT_NEAR(fidelity(StateVector::basis(1, 0), StateVector::basis(1, 1)), 0.0, 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    const auto plus = StateVector::from_amplitudes({r, r});
    EXPECT_NEAR(fidelity(StateVector(1), plus), 0.5, 1e-15);
    EXPECT_THROW((void)fidelity(StateVector(1), StateVector(2)), DimensionMismatchError);
}

TEST(Pauli, MergesDuplicateWords) {
    const PauliSum h = parse_pauli_sum("QUBITS 2\n1.0 ZI\n1.0 ZI\n");
    ASSERT_EQ(h.terms().size(), 1u);
    EXPECT_DOUBLE_EQ(h.terms()[0].coefficient, 2.0);
}

TEST(Pauli, ParseErrors) {
    EXPECT_THROW((void)parse_pauli_sum("QUBITS 2\n1.0 ZII\n"), ParseError);
    EXPECT_THROW((void)parse_pauli_sum("1.0 ZI\n"), ParseError);
    EXPECT_THROW((void)parse_pauli_sum("QUBITS 2\n1.0+2i ZI\n"), ParseError);
    EXPECT_THROW((void)parse_pauli_sum("QUBITS 2\nabc ZI\n"), ParseError);
    EXPECT_THROW((void)parse_pauli_sum("QUBITS 2\n1.0 ZQ\n"), ParseError);
}

TEST(Pauli, WriteReadRoundTrip) {
    gen::Rng rng(8);
    const PauliSum h = gen::pauli_sum(rng, 4, 10);
    std::ostringstream out;
    write_pauli_sum(out, h);
    const PauliSum back = parse_pauli_sum(out.str());
    ASSERT_EQ(back.terms().size(), h.terms().size());
    for (std::size_t i = 0; i < h.terms().size(); ++i) {
        EXPECT_EQ(back.terms()[i].word, h.terms()[i].word);
        EXPECT_EQ(back.terms()[i].coefficient, h.terms()[i].coefficient);
    }
}

// ---------------------------------------------------------------------------
// Gradients

TEST(Gradient, EmptyCircuit) {
    const Problem p = VqeProblem{tfim_hamiltonian(2, 1.0, 1.0)};
    EXPECT_TRUE(cost_gradient(Circuit(2), p).empty());
}

TEST(Gradient, SingleRotationAnalytic) {
    PauliSum z(1);
    z.add(1.0, "Z");
    const Problem p = VqeProblem{z};
    Circuit c(1);
    c.rx(0, 0.0);
    EXPECT_NEAR(cost_gradient(c, p)[0], 0.0, 1e-15);
    c.set_param(0, pi / 2);
    // <Z> = cos t, so dC/dt = -sin t.
    EXPECT_NEAR(cost_gradient(c, p)[0], -1.0, 1e-14);
}

void expect_matches_finite_differences(const Circuit &c, const Problem &p) {
    const CostGradient cg = cost_and_gradient(c, p);
    EXPECT_NEAR(cg.cost, evaluate_cost(c, p), 1e-12);
    auto f = [&](const std::vector<double> &x) {
        Circuit d = c;
        d.set_params(x);
        return evaluate_cost(d, p);
    };
    for (std::size_t i = 0; i < c.params().size(); ++i) {
        const double fd = oracle::central_difference(f, c.params(), i);
        if (std::abs(fd) > 1e-8) {
            EXPECT_LE(std::abs(cg.gradient[i] - fd), 1e-6 * std::abs(fd))
                << "slot " << i << " adjoint " << cg.gradient[i] << " fd " << fd;
        } else {
            EXPECT_LE(std::abs(cg.gradient[i]), 1e-8);
        }
    }
}

TEST(Gradient, HeaOnTfimMatchesFiniteDifferences) {
    gen::Rng rng(9);
    Circuit c = build_hea(4, 2);
    gen::randomize(c, rng);
    expect_matches_finite_differences(c, VqeProblem{tfim_hamiltonian(4, 1.0, 1.0)});
}

TEST(Gradient, RandomVqeMatchesFiniteDifferences) {
    gen::Rng rng(10);
    for (int trial = 0; trial < 25; ++trial) {
        const Circuit c = gen::circuit(rng, {.max_qubits = 4, .max_gates = 25, .with_kak = true, .zero_angle_rate = 0.0});
        expect_matches_finite_differences(c, VqeProblem{gen::pauli_sum(rng, c.n_qubits(), 5)});
    }
}

TEST(Gradient, AutoencoderMatchesFiniteDifferences) {
    gen::Rng rng(11);
    for (auto variant : {CompressionCost::Local, CompressionCost::Global}) {
        for (int trial = 0; trial < 8; ++trial) {
            const Circuit c = gen::circuit(rng, {.min_qubits = 3, .max_qubits = 4, .max_gates = 25, .with_kak = true, .zero_angle_rate = 0.0});
            std::vector<StateVector> states;
            for (int k = 0; k < 3; ++k) {
                states.push_back(gen::state(rng, c.n_qubits()));
            }
            expect_matches_finite_differences(c, make_autoencoder_problem(states, 2, variant));
        }
    }
}

TEST(Gradient, CompilationMatchesFiniteDifferences) {
    gen::Rng rng(12);
    for (int trial = 0; trial < 8; ++trial) {
        Circuit c = gen::circuit(rng, {.min_qubits = 2, .max_qubits = 3, .max_gates = 20, .with_kak = true, .zero_angle_rate = 0.0});
        c.phase(gen::angle(rng));
        const int n = c.n_qubits();
        expect_matches_finite_differences(c, build_compilation_training_set(n, 1 << n, 77));
    }
}

} // namespace
} // namespace vans
