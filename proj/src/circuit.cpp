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

#include <algorithm>
#include <bit>
#include <cstring>

namespace vans {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::RotZ:
        return "RZ";
    case GateKind::RotX:
        return "RX";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::TwoQubitKAK:
        return "KAK";
    case GateKind::Phase:
        return "PHASE";
    }
    return "?";
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw Error("circuit needs at least one qubit");
    }
}

void Circuit::set_params(std::span<const double> params) {
    if (params.size() != params_.size()) {
        throw DimensionMismatchError("parameter vector has " +
                                     std::to_string(params.size()) +
                                     " entries, circuit has " +
                                     std::to_string(params_.size()) + " slots");
    }
    std::copy(params.begin(), params.end(), params_.begin());
}

void Circuit::set_param(std::size_t slot, double value) {
    params_.at(slot) = value;
}

std::span<const double> Circuit::angles(std::size_t i) const {
    const Gate &g = gates_.at(i);
    return {params_.data() + g.slot,
            static_cast<std::size_t>(angle_slots(g.kind))};
}

void Circuit::check_qubits(GateKind kind, std::array<int, 2> qubits) const {
    const int arity = gate_arity(kind);
    for (int k = 0; k < arity; ++k) {
        if (qubits[k] < 0 || qubits[k] >= n_qubits_) {
            throw Error(to_string(kind) + " qubit index " +
                        std::to_string(qubits[k]) + " out of range [0, " +
                        std::to_string(n_qubits_) + ")");
        }
    }
    if (arity == 2 && qubits[0] == qubits[1]) {
        throw InvalidBlockError(to_string(kind) +
                                " needs two distinct qubits");
    }
}

void Circuit::append(GateKind kind, std::array<int, 2> qubits,
                     std::span<const double> angles) {
    const auto slots = static_cast<std::size_t>(angle_slots(kind));
    if (!angles.empty() && angles.size() != slots) {
        throw Error(to_string(kind) + " takes " + std::to_string(slots) +
                    " angles, got " + std::to_string(angles.size()));
    }
    const int arity = gate_arity(kind);
    for (int k = arity; k < 2; ++k) {
        qubits[k] = -1;
    }
    check_qubits(kind, qubits);
    gates_.push_back(Gate{kind, qubits, params_.size()});
    if (angles.empty()) {
        params_.resize(params_.size() + slots, 0.0);
    } else {
        params_.insert(params_.end(), angles.begin(), angles.end());
    }
}

void Circuit::rz(int q, double theta) {
    append(GateKind::RotZ, {q, -1}, std::span<const double>(&theta, 1));
}

void Circuit::rx(int q, double theta) {
    append(GateKind::RotX, {q, -1}, std::span<const double>(&theta, 1));
}

void Circuit::cnot(int control, int target) {
    append(GateKind::CNOT, {control, target});
}

void Circuit::kak(int q1, int q2, std::span<const double> angles) {
    append(GateKind::TwoQubitKAK, {q1, q2}, angles);
}

void Circuit::phase(double theta) {
    append(GateKind::Phase, {-1, -1}, std::span<const double>(&theta, 1));
}

void Circuit::append(const Circuit &other) {
    insert(gates_.size(), other);
}

void Circuit::insert(std::size_t pos, const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw DimensionMismatchError("cannot splice a " +
                                     std::to_string(other.n_qubits_) +
                                     "-qubit circuit into a " +
                                     std::to_string(n_qubits_) +
                                     "-qubit circuit");
    }
    if (pos > gates_.size()) {
        throw Error("insertion position out of range");
    }
    const std::size_t slot_pos =
        pos == gates_.size() ? params_.size() : gates_[pos].slot;
    const std::size_t added = other.params_.size();

    std::vector<Gate> block = other.gates_;
    for (Gate &g : block) {
        g.slot += slot_pos;
    }
    for (std::size_t i = pos; i < gates_.size(); ++i) {
        gates_[i].slot += added;
    }
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(pos),
                  block.begin(), block.end());
    params_.insert(params_.begin() + static_cast<std::ptrdiff_t>(slot_pos),
                   other.params_.begin(), other.params_.end());
}

void Circuit::erase(std::size_t i) {
    const Gate g = gates_.at(i);
    const auto slots = static_cast<std::size_t>(angle_slots(g.kind));
    params_.erase(params_.begin() + static_cast<std::ptrdiff_t>(g.slot),
                  params_.begin() + static_cast<std::ptrdiff_t>(g.slot + slots));
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t k = i; k < gates_.size(); ++k) {
        gates_[k].slot -= slots;
    }
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_);
    for (std::size_t i = gates_.size(); i-- > 0;) {
        const Gate &g = gates_[i];
        auto a = angles(i);
        switch (g.kind) {
        case GateKind::RotZ:
        case GateKind::RotX:
        case GateKind::Phase: {
            const double t = -a[0];
            inv.append(g.kind, g.qubits, std::span<const double>(&t, 1));
            break;
        }
        case GateKind::CNOT:
            inv.append(g.kind, g.qubits);
            break;
        case GateKind::TwoQubitKAK: {
            // (L1 core L0)^-1 = L0^-1 core^-1 L1^-1. A ZXZ triplet inverts
            // to the reversed triplet with negated angles.
            std::array<double, 15> b{};
            auto inv_triplet = [&](std::size_t from, std::size_t to) {
                b[to] = -a[from + 2];
                b[to + 1] = -a[from + 1];
                b[to + 2] = -a[from];
            };
            inv_triplet(9, 0);
            inv_triplet(12, 3);
            b[6] = -a[6];
            b[7] = -a[7];
            b[8] = -a[8];
            inv_triplet(0, 9);
            inv_triplet(3, 12);
            inv.append(g.kind, g.qubits, b);
            break;
        }
        }
    }
    return inv;
}

void Circuit::validate() const {
    std::size_t expected = 0;
    for (const Gate &g : gates_) {
        check_qubits(g.kind, g.qubits);
        if (g.slot != expected) {
            throw Error("parameter slots are not laid out in gate order");
        }
        expected += static_cast<std::size_t>(angle_slots(g.kind));
    }
    if (expected != params_.size()) {
        throw Error("orphan parameter slots: " +
                    std::to_string(params_.size() - expected));
    }
}

std::uint64_t Circuit::structural_hash() const {
    // FNV-1a over a canonical byte stream.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= (v >> (8 * k)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(n_qubits_));
    for (const Gate &g : gates_) {
        mix(static_cast<std::uint64_t>(g.kind));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(g.qubits[0])));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(g.qubits[1])));
    }
    for (double p : params_) {
        mix(std::bit_cast<std::uint64_t>(p));
    }
    return h;
}

std::size_t count_cnots(const Circuit &circuit) {
    std::size_t n = 0;
    for (const Gate &g : circuit.gates()) {
        n += static_cast<std::size_t>(cnot_weight(g.kind));
    }
    return n;
}

std::size_t count_params(const Circuit &circuit) {
    return circuit.params().size();
}

std::size_t count_two_qubit_gates(const Circuit &circuit) {
    return static_cast<std::size_t>(
        std::count_if(circuit.gates().begin(), circuit.gates().end(),
                      [](const Gate &g) { return gate_arity(g.kind) == 2; }));
}

Circuit build_product_ansatz(int n_qubits) {
    Circuit c(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        c.rz(q, 0.0);
        c.rx(q, 0.0);
        c.rz(q, 0.0);
    }
    return c;
}

namespace {

std::vector<std::array<int, 2>> brick_pairs(int n_qubits, int layer) {
    std::vector<std::array<int, 2>> pairs;
    const int first = (layer % 2 == 1) ? 0 : 1;
    for (int q = first; q + 1 < n_qubits; q += 2) {
        pairs.push_back({q, q + 1});
    }
    if (first == 1 && n_qubits % 2 == 0 && n_qubits > 2) {
        pairs.push_back({n_qubits - 1, 0});
    }
    return pairs;
}

} // namespace

Circuit build_hea(int n_qubits, int layers) {
    if (layers < 0) {
        throw Error("negative layer count");
    }
    if (layers == 0) {
        return build_product_ansatz(n_qubits);
    }
    if (n_qubits < 2) {
        throw Error("hardware-efficient ansatz needs at least two qubits");
    }
    Circuit c(n_qubits);
    for (int layer = 1; layer <= layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            c.rz(q, 0.0);
            c.rx(q, 0.0);
        }
        for (auto [a, b] : brick_pairs(n_qubits, layer)) {
            c.cnot(a, b);
        }
    }
    return c;
}

Circuit build_kak_hea(int n_qubits, int layers) {
    if (n_qubits < 2 || layers < 1) {
        throw Error("general two-qubit ansatz needs >= 2 qubits and >= 1 layer");
    }
    Circuit c(n_qubits);
    for (int layer = 1; layer <= layers; ++layer) {
        for (auto [a, b] : brick_pairs(n_qubits, layer)) {
            c.kak(a, b);
        }
    }
    return c;
}

} // namespace vans
