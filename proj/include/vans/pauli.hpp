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
 * Real-weighted sums of Pauli strings.
 *
 * Words are strings over {I, X, Y, Z}; character k acts on qubit k.
 *
 * File format:
 *
 *     # comment
 *     QUBITS 4
 *     -0.4804 ZIII
 *     0.1809 XXYY
 *
 * Repeated words are merged by adding their coefficients.
 */
#pragma once

#include "vans/state.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace vans {

struct PauliString {
    std::string word;
    double coefficient = 0.0;
};

class PauliSum {
  public:
    explicit PauliSum(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliString> &terms() const noexcept {
        return terms_;
    }

    /// Adds `coefficient * word`, merging with an existing identical word.
    void add(double coefficient, const std::string &word);

    /// Convenience: `coefficient` times the given single-qubit Paulis, e.g.
    /// add(-1.0, {{0, 'X'}, {1, 'X'}}).
    void add(double coefficient,
             std::initializer_list<std::pair<int, char>> factors);

    /// out <- H psi
    void apply(std::span<const cplx> psi, std::span<cplx> out) const;
    [[nodiscard]] StateVector apply(const StateVector &psi) const;

    /// Dense 2^n x 2^n matrix; n <= 12.
    [[nodiscard]] Eigen::MatrixXcd to_dense() const;

  private:
    struct Compiled {
        std::size_t flip;      // bits carrying X or Y
        std::size_t sign_bits; // bits carrying Y or Z
        cplx factor;           // coefficient * i^{#Y}
    };

    int n_qubits_;
    std::vector<PauliString> terms_;
    std::vector<Compiled> compiled_;
};

/// <psi|H|psi>. Throws if the imaginary residue exceeds 1e-10.
[[nodiscard]] double expectation(const StateVector &psi, const PauliSum &h);

[[nodiscard]] PauliSum read_pauli_sum(std::istream &in);
[[nodiscard]] PauliSum parse_pauli_sum(const std::string &text);
[[nodiscard]] PauliSum load_pauli_sum(const std::string &path);
void write_pauli_sum(std::ostream &out, const PauliSum &h);

} // namespace vans
