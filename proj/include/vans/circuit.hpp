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
 * Circuit intermediate representation.
 *
 * A circuit is an ordered gate list over `n` qubits together with a flat
 * vector of rotation angles. Gate `k` owns the contiguous parameter slots
 * `[slot, slot + angle_slots(kind))`; slots are laid out in gate order, so
 * the gate/slot relation is always a bijection.
 *
 * Conventions: RotZ(t) = exp(-i t Z / 2), RotX(t) = exp(-i t X / 2), and
 * qubit 0 is the most significant bit of a basis-state index.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vans {

enum class GateKind : std::uint8_t {
    RotZ,
    RotX,
    CNOT,
    /// General two-qubit gate: local ZXZ layers around an XX/YY/ZZ core.
    TwoQubitKAK,
    /// Trainable global phase exp(i t). Only used by phase-sensitive costs.
    Phase,
};

constexpr int angle_slots(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RotZ:
    case GateKind::RotX:
    case GateKind::Phase:
        return 1;
    case GateKind::CNOT:
        return 0;
    case GateKind::TwoQubitKAK:
        return 15;
    }
    return 0;
}

constexpr int gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RotZ:
    case GateKind::RotX:
        return 1;
    case GateKind::CNOT:
    case GateKind::TwoQubitKAK:
        return 2;
    case GateKind::Phase:
        return 0;
    }
    return 0;
}

constexpr bool is_rotation(GateKind kind) noexcept {
    return kind == GateKind::RotZ || kind == GateKind::RotX;
}

/// Number of CNOTs a gate is worth in reports. A general two-qubit gate
/// needs three.
constexpr int cnot_weight(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
        return 1;
    case GateKind::TwoQubitKAK:
        return 3;
    default:
        return 0;
    }
}

std::string to_string(GateKind kind);

struct Gate {
    GateKind kind;
    /// Unused entries are -1. For CNOT, qubits[0] is the control.
    std::array<int, 2> qubits{-1, -1};
    std::size_t slot = 0;

    [[nodiscard]] bool acts_on(int q) const noexcept {
        return qubits[0] == q || qubits[1] == q;
    }
    bool operator==(const Gate &) const = default;
};

class Circuit {
  public:
    explicit Circuit(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const Gate &gate(std::size_t i) const { return gates_.at(i); }

    [[nodiscard]] const std::vector<double> &params() const noexcept {
        return params_;
    }
    /// Replaces the whole angle vector; the size must match.
    void set_params(std::span<const double> params);
    void set_param(std::size_t slot, double value);

    /// Angles owned by gate `i`.
    [[nodiscard]] std::span<const double> angles(std::size_t i) const;

    void append(GateKind kind, std::array<int, 2> qubits,
                std::span<const double> angles = {});
    void rz(int q, double theta);
    void rx(int q, double theta);
    void cnot(int control, int target);
    void kak(int q1, int q2, std::span<const double> angles = {});
    void phase(double theta);

    /// Appends every gate of `other` (same qubit count).
    void append(const Circuit &other);
    /// Inserts every gate of `other` before gate `pos`.
    void insert(std::size_t pos, const Circuit &other);
    void erase(std::size_t i);

    /// Reversed gate order with negated angles.
    [[nodiscard]] Circuit inverse() const;

    /// Throws vans::Error when an invariant is broken.
    void validate() const;

    /// Hash over kinds, qubits and the exact bit patterns of the angles.
    [[nodiscard]] std::uint64_t structural_hash() const;

    bool operator==(const Circuit &) const = default;

  private:
    void check_qubits(GateKind kind, std::array<int, 2> qubits) const;

    int n_qubits_;
    std::vector<Gate> gates_;
    std::vector<double> params_;
};

[[nodiscard]] std::size_t count_cnots(const Circuit &circuit);
[[nodiscard]] std::size_t count_params(const Circuit &circuit);
/// Number of gates acting on two qubits (CNOT or general).
[[nodiscard]] std::size_t count_two_qubit_gates(const Circuit &circuit);

/// RotZ, RotX, RotZ on every qubit; no entanglers.
[[nodiscard]] Circuit build_product_ansatz(int n_qubits);

/**
 * Layered hardware-efficient ansatz.
 *
 * Every layer puts RotZ then RotX on each qubit and follows with CNOTs on
 * alternating neighbour pairs: pairs (0,1), (2,3), ... on odd layers and
 * (1,2), (3,4), ... on even layers. When `n_qubits` is even and larger than
 * two, the even layers also close the ring with (n-1, 0).
 *
 * `layers == 0` degenerates to the product ansatz.
 */
[[nodiscard]] Circuit build_hea(int n_qubits, int layers);

/// Same brick pattern as build_hea with general two-qubit gates instead of
/// rotation+CNOT layers.
[[nodiscard]] Circuit build_kak_hea(int n_qubits, int layers);

// Text format -------------------------------------------------------------

void write_circuit(std::ostream &out, const Circuit &circuit);
[[nodiscard]] std::string to_text(const Circuit &circuit);
[[nodiscard]] Circuit read_circuit(std::istream &in);
[[nodiscard]] Circuit parse_circuit(const std::string &text);
[[nodiscard]] Circuit load_circuit(const std::string &path);
void save_circuit(const std::string &path, const Circuit &circuit);

/// Shortest decimal form with 17 significant digits.
[[nodiscard]] std::string format_double(double value);

} // namespace vans
