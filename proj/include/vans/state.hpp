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
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vans {

using cplx = std::complex<double>;

/// Largest register the statevector paths accept.
inline constexpr int kMaxStateQubits = 20;

/// Basis-index mask of a qubit (qubit 0 is the most significant bit).
constexpr std::size_t qubit_mask(int n_qubits, int qubit) noexcept {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(int n_qubits);

    /// Takes ownership of amplitudes; the length must be a power of two.
    /// No normalization is applied.
    static StateVector from_amplitudes(std::vector<cplx> amplitudes);
    static StateVector basis(int n_qubits, std::size_t index);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amps_[i]; }
    cplx &operator[](std::size_t i) { return amps_[i]; }

    [[nodiscard]] double norm() const;
    void normalize();

    bool operator==(const StateVector &) const = default;

  private:
    StateVector(int n_qubits, std::vector<cplx> amps);

    int n_qubits_;
    std::vector<cplx> amps_;
};

/// <a|b>
[[nodiscard]] cplx inner(const StateVector &a, const StateVector &b);

/// |<a|b>|^2
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

} // namespace vans
