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
#include "vans/circuit.hpp"
#include "vans/error.hpp"
#include "vans/insertion.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

namespace vans {
namespace {

// Every slot belongs to exactly one gate and slots follow gate order.
void expect_slot_bijection(const Circuit &c) {
    std::size_t next = 0;
    for (const auto &g : c.gates()) {
        EXPECT_EQ(g.slot, next);
        next += static_cast<std::size_t>(angle_slots(g.kind));
    }
    EXPECT_EQ(next, c.params().size());
    EXPECT_NO_THROW(c.validate());
}

TEST(Circuit, ProductAnsatzCounts) {
    for (auto [n, params] : {std::pair{1, 3}, {4, 12}, {8, 24}}) {
        const Circuit c = build_product_ansatz(n);
        EXPECT_EQ(count_params(c), static_cast<std::size_t>(params));
        EXPECT_EQ(count_cnots(c), 0u);
    }
    const Circuit c = build_product_ansatz(2);
    ASSERT_EQ(c.size(), 6u);
    EXPECT_EQ(c.gate(0).kind, GateKind::RotZ);
    EXPECT_EQ(c.gate(1).kind, GateKind::RotX);
    EXPECT_EQ(c.gate(2).kind, GateKind::RotZ);
}

TEST(Circuit, HeaCounts) {
    EXPECT_EQ(count_params(build_hea(4, 2)), 16u);
    EXPECT_EQ(count_params(build_hea(8, 5)), 80u);
    EXPECT_EQ(count_cnots(build_hea(8, 5)), 20u);
    EXPECT_EQ(count_params(build_hea(2, 1)), 4u);
    EXPECT_EQ(count_cnots(build_hea(2, 1)), 1u);
    EXPECT_EQ(count_cnots(build_hea(4, 0)), 0u);
}

TEST(Circuit, HeaPairingAlternates) {
    const Circuit c = build_hea(4, 2);
    std::vector<std::array<int, 2>> pairs;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            pairs.push_back(g.qubits);
        }
    }
    const std::vector<std::array<int, 2>> expected{{0, 1}, {2, 3}, {1, 2}, {3, 0}};
    EXPECT_EQ(pairs, expected);
}

TEST(Circuit, BuildersAreDeterministic) {
    EXPECT_EQ(build_hea(6, 3), build_hea(6, 3));
    EXPECT_EQ(build_product_ansatz(5), build_product_ansatz(5));
}

TEST(Circuit, BlockCounts) {
    const Circuit c = build_two_qubit_block(3, 0, 2);
    EXPECT_EQ(count_cnots(c), 2u);
    EXPECT_EQ(count_params(c), 4u);
}

TEST(Circuit, KakWeighsThreeCnots) {
    Circuit c(2);
    c.kak(0, 1);
    c.cnot(1, 0);
    EXPECT_EQ(count_cnots(c), 4u);
    EXPECT_EQ(count_two_qubit_gates(c), 2u);
    EXPECT_EQ(count_params(c), 15u);
}

TEST(Circuit, RejectsBadQubits) {
    Circuit c(2);
    EXPECT_THROW(c.rz(2, 0.1), Error);
    EXPECT_THROW(c.rx(-1, 0.1), Error);
    EXPECT_THROW(c.cnot(1, 1), InvalidBlockError);
    EXPECT_THROW(build_two_qubit_block(2, 0, 0), InvalidBlockError);
    EXPECT_THROW(Circuit(0), Error);
}

TEST(Circuit, SetParamsChecksLength) {
    Circuit c = build_product_ansatz(2);
    EXPECT_THROW(c.set_params(std::vector<double>(5)), DimensionMismatchError);
}

TEST(Circuit, EditsKeepSlotBijection) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Circuit c = gen::circuit(rng, {.min_qubits = 2, .max_qubits = 4, .with_kak = true});
        const Circuit before = c;
        if (!c.empty()) {
            const std::size_t victim = static_cast<std::size_t>(gen::index(rng, static_cast<int>(c.size())));
            const Gate removed = c.gate(victim);
            c.erase(victim);
            expect_slot_bijection(c);
            EXPECT_EQ(c.params().size() + static_cast<std::size_t>(angle_slots(removed.kind)),
                      before.params().size());
        }
        const Circuit extra = gen::circuit(rng, {.min_qubits = c.n_qubits(), .max_qubits = c.n_qubits(), .max_gates = 6, .with_kak = true});
        const std::size_t pos = static_cast<std::size_t>(gen::index(rng, static_cast<int>(c.size()) + 1));
        const std::size_t size_before = c.size();
        c.insert(pos, extra);
        EXPECT_EQ(c.size(), size_before + extra.size());
        expect_slot_bijection(c);
    }
}

TEST(Circuit, InsertKeepsAngles) {
    Circuit c(1);
    c.rz(0, 0.1);
    c.rx(0, 0.2);
    Circuit mid(1);
    mid.rz(0, 0.3);
    c.insert(1, mid);
    EXPECT_EQ(c.params(), (std::vector<double>{0.1, 0.3, 0.2}));
}

TEST(Circuit, InverseUndoes) {
    gen::Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c = gen::circuit(rng, {.max_qubits = 3, .max_gates = 20, .with_kak = true});
        c.phase(0.7);
        const oracle::Mat u = oracle::unitary(c) * oracle::unitary(c.inverse());
        EXPECT_LT((u - oracle::Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Circuit, TextRoundTripIsLossless) {
    gen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c = gen::circuit(rng, {.with_kak = true});
        c.phase(gen::angle(rng));
        const Circuit back = parse_circuit(to_text(c));
        EXPECT_EQ(back, c);
        EXPECT_EQ(back.structural_hash(), c.structural_hash());
    }
}

TEST(Circuit, ParsesTextFormat) {
    const Circuit c = parse_circuit("# a comment\nQUBITS 2\nRZ 0 0.5\nCNOT 1 0\nRX 1 -0.25\n");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.gate(1).qubits, (std::array<int, 2>{1, 0}));
    EXPECT_EQ(c.params(), (std::vector<double>{0.5, -0.25}));
}

TEST(Circuit, ParseErrorsCarryLine) {
    EXPECT_THROW((void)parse_circuit("RZ 0 0.5\n"), ParseError);
    EXPECT_THROW((void)parse_circuit("QUBITS 2\nRY 0 0.5\n"), ParseError);
    EXPECT_THROW((void)parse_circuit("QUBITS 2\nRZ 0\n"), ParseError);
    EXPECT_THROW((void)parse_circuit("QUBITS 2\nRZ 0 abc\n"), ParseError);
    try {
        (void)parse_circuit("QUBITS 2\nRZ 0 0.1\nCNOT 0 5\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3);
    } catch (const Error &) {
        // Qubit range errors surface as plain errors from the builder.
    }
}

TEST(Circuit, HashSeesAngleBits) {
    Circuit a(1);
    a.rz(0, 0.1);
    Circuit b(1);
    b.rz(0, std::nextafter(0.1, 1.0));
    EXPECT_NE(a.structural_hash(), b.structural_hash());
}

} // namespace
} // namespace vans
