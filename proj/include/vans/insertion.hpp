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
 * Gate dictionary and the stochastic insertion step.
 *
 * Every dictionary block multiplies to the identity when its angles are
 * zero, so inserting a block leaves every cost unchanged until the angles
 * move.
 */
#pragma once

#include "vans/circuit.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace vans {

using Rng = std::mt19937_64;

/// A gate in a block template; qubits are placeholders 0 or 1 (or -1).
struct BlockGate {
    GateKind kind;
    std::array<int, 2> placeholders{-1, -1};
};

struct DictionaryBlock {
    std::string name;
    int arity = 1;
    std::vector<BlockGate> gates;

    [[nodiscard]] int n_angles() const;
};

using Dictionary = std::vector<DictionaryBlock>;

/// RotZ, RotX, RotZ on one qubit.
[[nodiscard]] DictionaryBlock one_qubit_block();
/// CNOT(c,t), RotZ(c), RotX(c), RotZ(t), RotX(t), CNOT(c,t).
[[nodiscard]] DictionaryBlock two_qubit_block();
/// A single general two-qubit gate.
[[nodiscard]] DictionaryBlock kak_block();

/// {one_qubit_block, two_qubit_block}
[[nodiscard]] Dictionary standard_dictionary();
/// {kak_block} for two or more qubits, {one_qubit_block} for one.
[[nodiscard]] Dictionary compilation_dictionary(int n_qubits);

/// Instantiates `block` on `qubits`. Empty `angles` means all zero.
[[nodiscard]] Circuit instantiate(const DictionaryBlock &block, int n_qubits,
                                  std::span<const int> qubits,
                                  std::span<const double> angles = {});

[[nodiscard]] Circuit build_one_qubit_block(int n_qubits, int qubit,
                                            std::span<const double> angles = {});
/// Throws InvalidBlockError when control == target.
[[nodiscard]] Circuit build_two_qubit_block(int n_qubits, int control,
                                            int target,
                                            std::span<const double> angles = {});

enum class PositionMode {
    /// New blocks go at the end of the circuit.
    Append,
    /// Uniformly random gate boundary.
    Anywhere,
};

struct InsertionPolicy {
    /// Standard deviation of the initial angles of a new block (radians).
    double epsilon_init = 0.01;
    /// One weight per dictionary block; empty means uniform.
    std::vector<double> block_weights;
    /// Pair (a, b) is drawn with weight (1 + #entanglers(a, b))^-bias.
    double connectivity_bias = 1.0;
    PositionMode position = PositionMode::Append;
    Dictionary dictionary = standard_dictionary();

    void validate() const;
};

struct Placement {
    std::array<int, 2> qubits{-1, -1};
    std::size_t position = 0;
};

/// Index of the sampled dictionary block.
[[nodiscard]] std::size_t choose_block(const InsertionPolicy &policy, Rng &rng);

/// Unnormalized placement weight of every unordered pair (a < b), in
/// lexicographic order.
[[nodiscard]] std::vector<double> pair_weights(const Circuit &circuit,
                                               double connectivity_bias);

[[nodiscard]] Placement choose_placement(const Circuit &circuit,
                                         const DictionaryBlock &block,
                                         const InsertionPolicy &policy,
                                         Rng &rng);

/// Samples a block and a placement and splices the block in. The prefix of
/// the result equals `circuit` in Append mode.
[[nodiscard]] Circuit insert(const Circuit &circuit,
                             const InsertionPolicy &policy, Rng &rng);

} // namespace vans
