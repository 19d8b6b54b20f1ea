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
#include "vans/insertion.hpp"

#include "vans/error.hpp"

#include <cmath>
#include <numeric>

namespace vans {

int DictionaryBlock::n_angles() const {
    int total = 0;
    for (const BlockGate &g : gates) {
        total += angle_slots(g.kind);
    }
    return total;
}

DictionaryBlock one_qubit_block() {
    return {"one_qubit",
            1,
            {{GateKind::RotZ, {0, -1}},
             {GateKind::RotX, {0, -1}},
             {GateKind::RotZ, {0, -1}}}};
}

DictionaryBlock two_qubit_block() {
    return {"two_qubit",
            2,
            {{GateKind::CNOT, {0, 1}},
             {GateKind::RotZ, {0, -1}},
             {GateKind::RotX, {0, -1}},
             {GateKind::RotZ, {1, -1}},
             {GateKind::RotX, {1, -1}},
             {GateKind::CNOT, {0, 1}}}};
}

DictionaryBlock kak_block() {
    return {"kak", 2, {{GateKind::TwoQubitKAK, {0, 1}}}};
}

Dictionary standard_dictionary() { return {one_qubit_block(), two_qubit_block()}; }

Dictionary compilation_dictionary(int n_qubits) {
    if (n_qubits < 2) {
        return {one_qubit_block()};
    }
    return {kak_block()};
}

Circuit instantiate(const DictionaryBlock &block, int n_qubits,
                    std::span<const int> qubits, std::span<const double> angles) {
    if (qubits.size() != static_cast<std::size_t>(block.arity)) {
        throw InvalidBlockError("block '" + block.name + "' needs " +
                                std::to_string(block.arity) + " qubit(s)");
    }
    if (block.arity == 2 && qubits[0] == qubits[1]) {
        throw InvalidBlockError("block '" + block.name +
                                "' needs two distinct qubits");
    }
    if (!angles.empty() &&
        angles.size() != static_cast<std::size_t>(block.n_angles())) {
        throw InvalidBlockError("block '" + block.name + "' takes " +
                                std::to_string(block.n_angles()) + " angles");
    }
    Circuit c(n_qubits);
    std::size_t next = 0;
    for (const BlockGate &g : block.gates) {
        std::array<int, 2> q{-1, -1};
        for (int k = 0; k < 2; ++k) {
            if (g.placeholders[k] >= 0) {
                q[k] = qubits[static_cast<std::size_t>(g.placeholders[k])];
            }
        }
        const auto slots = static_cast<std::size_t>(angle_slots(g.kind));
        c.append(g.kind, q,
                 angles.empty() ? std::span<const double>{}
                                : angles.subspan(next, slots));
        next += slots;
    }
    return c;
}

Circuit build_one_qubit_block(int n_qubits, int qubit,
                              std::span<const double> angles) {
    const int q[1] = {qubit};
    return instantiate(one_qubit_block(), n_qubits, q, angles);
}

Circuit build_two_qubit_block(int n_qubits, int control, int target,
                              std::span<const double> angles) {
    const int q[2] = {control, target};
    return instantiate(two_qubit_block(), n_qubits, q, angles);
}

void InsertionPolicy::validate() const {
    if (dictionary.empty()) {
        throw Error("empty gate dictionary");
    }
    if (!(epsilon_init >= 0.0)) {
        throw Error("epsilon_init must be non-negative");
    }
    if (!(connectivity_bias > 0.0)) {
        throw Error("connectivity_bias must be positive");
    }
    if (!block_weights.empty()) {
        if (block_weights.size() != dictionary.size()) {
            throw Error("need one block weight per dictionary block");
        }
        double total = 0.0;
        for (double w : block_weights) {
            if (!(w >= 0.0)) {
                throw Error("block weights must be non-negative");
            }
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            throw Error("block weights must sum to 1");
        }
    }
}

namespace {

std::size_t sample_index(std::span<const double> weights, Rng &rng) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::uniform_real_distribution<double> u(0.0, total);
    const double x = u(rng);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        acc += weights[i];
        last_positive = i;
        if (x < acc) {
            return i;
        }
    }
    return last_positive;
}

} // namespace

std::size_t choose_block(const InsertionPolicy &policy, Rng &rng) {
    if (policy.dictionary.empty()) {
        throw Error("empty gate dictionary");
    }
    if (policy.block_weights.empty()) {
        std::vector<double> uniform(policy.dictionary.size(), 1.0);
        return sample_index(uniform, rng);
    }
    return sample_index(policy.block_weights, rng);
}

std::vector<double> pair_weights(const Circuit &circuit, double connectivity_bias) {
    const int n = circuit.n_qubits();
    std::vector<int> counts(static_cast<std::size_t>(n * n), 0);
    for (const Gate &g : circuit.gates()) {
        if (gate_arity(g.kind) == 2) {
            const int a = std::min(g.qubits[0], g.qubits[1]);
            const int b = std::max(g.qubits[0], g.qubits[1]);
            ++counts[static_cast<std::size_t>(a * n + b)];
        }
    }
    std::vector<double> w;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            w.push_back(std::pow(1.0 + counts[static_cast<std::size_t>(a * n + b)],
                                 -connectivity_bias));
        }
    }
    return w;
}

Placement choose_placement(const Circuit &circuit, const DictionaryBlock &block,
                           const InsertionPolicy &policy, Rng &rng) {
    const int n = circuit.n_qubits();
    if (block.arity > n) {
        throw InvalidBlockError("block '" + block.name + "' does not fit on " +
                                std::to_string(n) + " qubit(s)");
    }
    Placement p;
    if (block.arity == 1) {
        std::uniform_int_distribution<int> q(0, n - 1);
        p.qubits = {q(rng), -1};
    } else {
        const auto w = pair_weights(circuit, policy.connectivity_bias);
        std::size_t k = sample_index(w, rng);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (k-- == 0) {
                    p.qubits = {a, b};
                }
            }
        }
        std::bernoulli_distribution flip(0.5);
        if (flip(rng)) {
            std::swap(p.qubits[0], p.qubits[1]);
        }
    }
    if (policy.position == PositionMode::Append) {
        p.position = circuit.size();
    } else {
        std::uniform_int_distribution<std::size_t> pos(0, circuit.size());
        p.position = pos(rng);
    }
    return p;
}

Circuit insert(const Circuit &circuit, const InsertionPolicy &policy, Rng &rng) {
    policy.validate();
    // Blocks that do not fit are never drawn.
    InsertionPolicy feasible = policy;
    feasible.dictionary.clear();
    feasible.block_weights.clear();
    std::vector<double> weights;
    for (std::size_t i = 0; i < policy.dictionary.size(); ++i) {
        if (policy.dictionary[i].arity <= circuit.n_qubits()) {
            feasible.dictionary.push_back(policy.dictionary[i]);
            weights.push_back(policy.block_weights.empty() ? 1.0
                                                           : policy.block_weights[i]);
        }
    }
    if (feasible.dictionary.empty()) {
        throw InvalidBlockError("no dictionary block fits the register");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) {
        throw InvalidBlockError("all feasible blocks have zero weight");
    }
    for (double &w : weights) {
        w /= total;
    }
    feasible.block_weights = std::move(weights);

    const DictionaryBlock &block = feasible.dictionary[choose_block(feasible, rng)];
    const Placement where = choose_placement(circuit, block, feasible, rng);

    std::vector<double> angles(static_cast<std::size_t>(block.n_angles()), 0.0);
    if (policy.epsilon_init > 0.0) {
        std::normal_distribution<double> noise(0.0, policy.epsilon_init);
        for (double &a : angles) {
            a = noise(rng);
        }
    }
    const std::span<const int> qubits(where.qubits.data(),
                                      static_cast<std::size_t>(block.arity));
    Circuit out = circuit;
    out.insert(where.position, instantiate(block, circuit.n_qubits(), qubits, angles));
    return out;
}

} // namespace vans
