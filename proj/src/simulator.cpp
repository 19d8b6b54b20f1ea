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
#include "vans/simulator.hpp"

#include "primitives.hpp"
#include "vans/error.hpp"

#include <cmath>
#include <string>

namespace vans {
namespace detail {

std::vector<Prim> lower(const Circuit &circuit) {
    std::vector<Prim> prims;
    prims.reserve(circuit.size());
    for (const Gate &g : circuit.gates()) {
        const auto s = static_cast<std::ptrdiff_t>(g.slot);
        const int a = g.qubits[0];
        const int b = g.qubits[1];
        switch (g.kind) {
        case GateKind::RotZ:
            prims.push_back({PrimKind::RotZ, a, -1, s});
            break;
        case GateKind::RotX:
            prims.push_back({PrimKind::RotX, a, -1, s});
            break;
        case GateKind::CNOT:
            prims.push_back({PrimKind::CNOT, a, b, -1});
            break;
        case GateKind::Phase:
            prims.push_back({PrimKind::Phase, -1, -1, s});
            break;
        case GateKind::TwoQubitKAK: {
            auto zxz = [&](int q, std::ptrdiff_t base) {
                prims.push_back({PrimKind::RotZ, q, -1, base});
                prims.push_back({PrimKind::RotX, q, -1, base + 1});
                prims.push_back({PrimKind::RotZ, q, -1, base + 2});
            };
            zxz(a, s);
            zxz(b, s + 3);
            prims.push_back({PrimKind::RotXX, a, b, s + 6});
            prims.push_back({PrimKind::RotYY, a, b, s + 7});
            prims.push_back({PrimKind::RotZZ, a, b, s + 8});
            zxz(a, s + 9);
            zxz(b, s + 12);
            break;
        }
        }
    }
    return prims;
}

namespace {

using kernels::Mat2;
using kernels::Mat4;

// cos(t/2) I - i sin(t/2) P for P = XX or YY; `sign` holds the anti-diagonal
// of P read from row 0 to row 3.
Mat4 antidiagonal_rotation(double t, const double (&sign)[4]) {
    const double c = std::cos(0.5 * t);
    const double s = std::sin(0.5 * t);
    Mat4 m{};
    for (int r = 0; r < 4; ++r) {
        m.m[5 * r] = c;
        m.m[4 * r + (3 - r)] = cplx{0.0, -s * sign[r]};
    }
    return m;
}

constexpr double kXXSign[4] = {1.0, 1.0, 1.0, 1.0};
constexpr double kYYSign[4] = {-1.0, 1.0, 1.0, -1.0};

Mat4 zz_rotation(double t) {
    const cplx e0 = std::polar(1.0, -0.5 * t);
    const cplx e1 = std::polar(1.0, 0.5 * t);
    Mat4 m{};
    m.m[0] = e0;
    m.m[5] = e1;
    m.m[10] = e1;
    m.m[15] = e0;
    return m;
}

Mat4 pauli_pair(PrimKind kind) {
    Mat4 m{};
    switch (kind) {
    case PrimKind::RotXX:
        for (int r = 0; r < 4; ++r) {
            m.m[4 * r + (3 - r)] = kXXSign[r];
        }
        break;
    case PrimKind::RotYY:
        for (int r = 0; r < 4; ++r) {
            m.m[4 * r + (3 - r)] = kYYSign[r];
        }
        break;
    default:
        m.m[0] = 1.0;
        m.m[5] = -1.0;
        m.m[10] = -1.0;
        m.m[15] = 1.0;
        break;
    }
    return m;
}

} // namespace

void apply_prim(std::span<cplx> amps, int n, const Prim &p, double t) {
    const kernels::KernelSet &k = kernels::active();
    switch (p.kind) {
    case PrimKind::RotZ:
        k.apply_diag2(amps, qubit_mask(n, p.a), std::polar(1.0, -0.5 * t),
                      std::polar(1.0, 0.5 * t));
        break;
    case PrimKind::RotX: {
        const double c = std::cos(0.5 * t);
        const double s = std::sin(0.5 * t);
        const Mat2 m{{cplx{c, 0.0}, cplx{0.0, -s}, cplx{0.0, -s}, cplx{c, 0.0}}};
        k.apply_mat2(amps, qubit_mask(n, p.a), m);
        break;
    }
    case PrimKind::RotXX:
        k.apply_mat4(amps, qubit_mask(n, p.a), qubit_mask(n, p.b),
                     antidiagonal_rotation(t, kXXSign));
        break;
    case PrimKind::RotYY:
        k.apply_mat4(amps, qubit_mask(n, p.a), qubit_mask(n, p.b),
                     antidiagonal_rotation(t, kYYSign));
        break;
    case PrimKind::RotZZ:
        k.apply_mat4(amps, qubit_mask(n, p.a), qubit_mask(n, p.b),
                     zz_rotation(t));
        break;
    case PrimKind::CNOT:
        k.apply_cnot(amps, qubit_mask(n, p.a), qubit_mask(n, p.b));
        break;
    case PrimKind::Phase:
        k.scale(amps, std::polar(1.0, t));
        break;
    }
}

void apply_generator(std::span<cplx> amps, int n, const Prim &p) {
    const kernels::KernelSet &k = kernels::active();
    switch (p.kind) {
    case PrimKind::RotZ:
        k.apply_diag2(amps, qubit_mask(n, p.a), 1.0, -1.0);
        break;
    case PrimKind::RotX:
        k.apply_mat2(amps, qubit_mask(n, p.a),
                     Mat2{{cplx{0.0}, cplx{1.0}, cplx{1.0}, cplx{0.0}}});
        break;
    case PrimKind::RotXX:
    case PrimKind::RotYY:
    case PrimKind::RotZZ:
        k.apply_mat4(amps, qubit_mask(n, p.a), qubit_mask(n, p.b),
                     pauli_pair(p.kind));
        break;
    case PrimKind::Phase:
        k.scale(amps, cplx{-2.0, 0.0});
        break;
    case PrimKind::CNOT:
        break;
    }
}

} // namespace detail

void apply_circuit_inplace(StateVector &state, const Circuit &circuit) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw DimensionMismatchError(
            "state has " + std::to_string(state.n_qubits()) +
            " qubits, circuit has " + std::to_string(circuit.n_qubits()));
    }
    const auto &params = circuit.params();
    for (const detail::Prim &p : detail::lower(circuit)) {
        detail::apply_prim(state.amplitudes(), circuit.n_qubits(), p,
                           p.slot >= 0 ? params[static_cast<std::size_t>(p.slot)]
                                       : 0.0);
    }
}

StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    apply_circuit_inplace(state, circuit);
    return state;
}

Eigen::MatrixXcd circuit_to_unitary(const Circuit &circuit) {
    const int n = circuit.n_qubits();
    if (n > kMaxDenseQubits) {
        throw TooLargeError("dense unitary limited to " +
                            std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim),
                       static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        StateVector col = apply_circuit(StateVector::basis(n, j), circuit);
        for (std::size_t i = 0; i < dim; ++i) {
            u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                col[i];
        }
    }
    return u;
}

} // namespace vans
