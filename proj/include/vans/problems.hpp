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
 * Problem constructors: spin-chain Hamiltonians, autoencoder and compilation
 * costs, QFT targets and the exact-diagonalization reference.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/pauli.hpp"
#include "vans/problem.hpp"
#include "vans/state.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vans {

/// H = -J sum_j X_j X_{j+1} - g sum_j Z_j on a ring.
[[nodiscard]] PauliSum tfim_hamiltonian(int n, double J, double g);

/// H = sum_j (X_j X_{j+1} + Y_j Y_{j+1} + delta Z_j Z_{j+1}) + g sum_j Z_j on
/// a ring.
[[nodiscard]] PauliSum xxz_hamiltonian(int n, double delta, double g);

struct SpectrumResult {
    double ground_energy;
    StateVector ground_state;
};

/// Lowest eigenpair by dense Hermitian diagonalization (n <= 12).
[[nodiscard]] SpectrumResult exact_ground(const PauliSum &h);

[[nodiscard]] double vqe_cost(const Circuit &circuit, const PauliSum &h);

/// Uniform-weight autoencoder problem.
[[nodiscard]] AutoencoderProblem
make_autoencoder_problem(std::vector<StateVector> states, int n_trash,
                         CompressionCost variant = CompressionCost::Local);

[[nodiscard]] double autoencoder_cost(const Circuit &circuit,
                                      const AutoencoderProblem &problem);

/**
 * Fidelity between `state` and the result of encoding it, resetting the
 * trailing `n_trash` qubits to |0> and decoding with the inverse circuit.
 */
[[nodiscard]] double encode_decode_fidelity(const Circuit &encoder,
                                            const StateVector &state,
                                            int n_trash);

[[nodiscard]] double compilation_cost(const Circuit &circuit,
                                      const CompilationProblem &problem);

/// (U)_{jk} = w^{jk} / sqrt(2^n), w = exp(2 pi i / 2^n).
[[nodiscard]] Eigen::MatrixXcd qft_unitary(int n);

/**
 * `count` pairwise-orthonormal random inputs (Gram-Schmidt on complex
 * Gaussian vectors) paired with their images under `target`. Deterministic
 * in `seed`.
 */
[[nodiscard]] CompilationProblem
build_compilation_training_set(const Eigen::MatrixXcd &target, int count,
                               std::uint64_t seed);

/// Training set for the n-qubit QFT.
[[nodiscard]] CompilationProblem build_compilation_training_set(int n, int count,
                                                                std::uint64_t seed);

/// Squared Frobenius norm of target - V (phase sensitive).
[[nodiscard]] double diagnostic_unitary_distance(const Circuit &circuit,
                                                 const Eigen::MatrixXcd &target);

// State-list serialization ------------------------------------------------
//
//     STATES <N> QUBITS <n>
//     re_0 im_0 re_1 im_1 ...      (one line per state, basis-index order)

void write_states(std::ostream &out, const std::vector<StateVector> &states);
[[nodiscard]] std::vector<StateVector> read_states(std::istream &in);
void save_states(const std::string &path, const std::vector<StateVector> &states);
[[nodiscard]] std::vector<StateVector> load_states(const std::string &path);

} // namespace vans
