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
#include "vans/state.hpp"

#include "vans/error.hpp"
#include "vans/kernels.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace vans {

namespace {

void check_qubits(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
        throw TooLargeError("statevector qubit count " +
                            std::to_string(n_qubits) + " outside [1, " +
                            std::to_string(kMaxStateQubits) + "]");
    }
}

} // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubits(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionMismatchError("amplitude count " + std::to_string(dim) +
                                     " is not a power of two >= 2");
    }
    const int n = std::countr_zero(dim);
    check_qubits(n);
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw Error("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    return std::sqrt(kernels::active().norm2(amps_));
}

void StateVector::normalize() {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw Error("cannot normalize the zero vector");
    }
    kernels::active().scale(amps_, cplx{1.0 / nrm, 0.0});
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("inner product of states with " +
                                     std::to_string(a.n_qubits()) + " and " +
                                     std::to_string(b.n_qubits()) + " qubits");
    }
    return kernels::active().dot(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector &a, const StateVector &b) {
    const double f = std::norm(inner(a, b));
    return f > 1.0 ? 1.0 : f;
}

} // namespace vans
