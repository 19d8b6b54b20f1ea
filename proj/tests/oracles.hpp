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
 * Test-side reference implementations. Nothing here calls into the
 * simulator: gates are written out as dense matrices and combined with
 * Kronecker products, so agreement with the library is meaningful.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/pauli.hpp"
#include "vans/state.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli(char p) {
    Mat m(2, 2);
    switch (p) {
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, cplx(0, -1), cplx(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        m << 1, 0, 0, 1;
        break;
    }
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Dense Pauli word; character k acts on qubit k (qubit 0 leftmost factor).
inline Mat pauli_word(const std::string &word) {
    Mat m = Mat::Identity(1, 1);
    for (char c : word) {
        m = kron(m, pauli(c));
    }
    return m;
}

/// exp(-i t P / 2) for a Pauli word P.
inline Mat rotation(const std::string &word, double t) {
    const Mat p = pauli_word(word);
    return std::cos(t / 2) * Mat::Identity(p.rows(), p.cols()) -
           cplx(0, 1) * std::sin(t / 2) * p;
}

inline std::string single(int n, int q, char p) {
    std::string w(static_cast<std::size_t>(n), 'I');
    w[static_cast<std::size_t>(q)] = p;
    return w;
}

inline std::string pair_word(int n, int a, int b, char p) {
    std::string w(static_cast<std::size_t>(n), 'I');
    w[static_cast<std::size_t>(a)] = p;
    w[static_cast<std::size_t>(b)] = p;
    return w;
}

/// CNOT = |0><0|_c (x) I + |1><1|_c (x) X_t, as a sum of Pauli words.
inline Mat cnot(int n, int c, int t) {
    const Mat id = pauli_word(std::string(static_cast<std::size_t>(n), 'I'));
    const Mat zc = pauli_word(single(n, c, 'Z'));
    const Mat xt = pauli_word(single(n, t, 'X'));
    std::string zx = single(n, c, 'Z');
    zx[static_cast<std::size_t>(t)] = 'X';
    return 0.5 * (id + zc + xt - pauli_word(zx));
}

/// General two-qubit gate: ZXZ on each qubit, XX/YY/ZZ core, ZXZ again.
inline Mat kak(int n, int a, int b, const double *t) {
    Mat u = Mat::Identity(1 << n, 1 << n);
    auto push = [&](const Mat &g) { u = g * u; };
    int k = 0;
    for (int q : {a, b}) {
        push(rotation(single(n, q, 'Z'), t[k++]));
        push(rotation(single(n, q, 'X'), t[k++]));
        push(rotation(single(n, q, 'Z'), t[k++]));
    }
    for (char p : {'X', 'Y', 'Z'}) {
        push(rotation(pair_word(n, a, b, p), t[k++]));
    }
    for (int q : {a, b}) {
        push(rotation(single(n, q, 'Z'), t[k++]));
        push(rotation(single(n, q, 'X'), t[k++]));
        push(rotation(single(n, q, 'Z'), t[k++]));
    }
    return u;
}

inline Mat gate_matrix(const vans::Circuit &c, std::size_t i) {
    const int n = c.n_qubits();
    const vans::Gate &g = c.gate(i);
    const auto a = c.angles(i);
    switch (g.kind) {
    case vans::GateKind::RotZ:
        return rotation(single(n, g.qubits[0], 'Z'), a[0]);
    case vans::GateKind::RotX:
        return rotation(single(n, g.qubits[0], 'X'), a[0]);
    case vans::GateKind::CNOT:
        return cnot(n, g.qubits[0], g.qubits[1]);
    case vans::GateKind::TwoQubitKAK:
        return kak(n, g.qubits[0], g.qubits[1], a.data());
    case vans::GateKind::Phase:
        return std::exp(cplx(0, a[0])) * Mat::Identity(1 << n, 1 << n);
    }
    return {};
}

inline Mat unitary(const vans::Circuit &c) {
    Mat u = Mat::Identity(1 << c.n_qubits(), 1 << c.n_qubits());
    for (std::size_t i = 0; i < c.size(); ++i) {
        u = gate_matrix(c, i) * u;
    }
    return u;
}

inline Vec to_vec(const vans::StateVector &s) {
    Vec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline Mat dense(const vans::PauliSum &h) {
    Mat m = Mat::Zero(1 << h.n_qubits(), 1 << h.n_qubits());
    for (const auto &t : h.terms()) {
        m += t.coefficient * pauli_word(t.word);
    }
    return m;
}

/// Lowest eigenvalue of a Hermitian matrix by power iteration on
/// (s I - H), s an upper bound on the spectrum (Gershgorin).
inline double ground_energy_power(const Mat &h, int iters = 20000) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        s = std::max(s, h.row(i).cwiseAbs().sum());
    }
    const Mat shifted = s * Mat::Identity(h.rows(), h.cols()) - h;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    Vec v(h.rows());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = cplx(nd(rng), nd(rng));
    }
    v.normalize();
    double lambda = 0.0;
    for (int k = 0; k < iters; ++k) {
        Vec w = shifted * v;
        const double next = w.norm();
        v = w / next;
        if (k > 100 && std::abs(next - lambda) < 1e-15 * std::abs(next)) {
            break;
        }
        lambda = next;
    }
    return (v.adjoint() * h * v)(0, 0).real();
}

/// Distance between two states after removing the global phase.
inline double phase_distance(const Vec &a, const Vec &b) {
    const cplx ov = b.dot(a); // conj(b) . a
    const cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1, 0);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

inline double unitary_phase_distance(const Mat &a, const Mat &b) {
    const cplx tr = (b.adjoint() * a).trace();
    const cplx ph = std::abs(tr) > 0 ? tr / std::abs(tr) : cplx(1, 0);
    return (a - ph * b).cwiseAbs().maxCoeff();
}

} // namespace oracle

namespace oracle {

/// Five-point central difference of f at x along coordinate i.
template <class F>
double central_difference(F &&f, std::vector<double> x, std::size_t i, double h = 1e-3) {
    const double x0 = x[i];
    auto at = [&](double d) {
        x[i] = x0 + d;
        return f(x);
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

} // namespace oracle
