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
#include "vans/problems.hpp"

#include "vans/error.hpp"
#include "vans/kernels.hpp"
#include "vans/simulator.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace vans {

PauliSum tfim_hamiltonian(int n, double J, double g) {
    if (n < 2) {
        throw Error("TFIM needs at least two sites");
    }
    PauliSum h(n);
    for (int j = 0; j < n; ++j) {
        h.add(-J, {{j, 'X'}, {(j + 1) % n, 'X'}});
    }
    for (int j = 0; j < n; ++j) {
        h.add(-g, {{j, 'Z'}});
    }
    return h;
}

PauliSum xxz_hamiltonian(int n, double delta, double g) {
    if (n < 2) {
        throw Error("XXZ chain needs at least two sites");
    }
    PauliSum h(n);
    for (int j = 0; j < n; ++j) {
        const int k = (j + 1) % n;
        h.add(1.0, {{j, 'X'}, {k, 'X'}});
        h.add(1.0, {{j, 'Y'}, {k, 'Y'}});
        h.add(delta, {{j, 'Z'}, {k, 'Z'}});
    }
    for (int j = 0; j < n; ++j) {
        h.add(g, {{j, 'Z'}});
    }
    return h;
}

SpectrumResult exact_ground(const PauliSum &h) {
    if (h.n_qubits() > 12) {
        throw TooLargeError("exact diagonalization limited to 12 qubits");
    }
    const Eigen::MatrixXcd m = h.to_dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("eigensolver failed");
    }
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    std::vector<cplx> amps(v.data(), v.data() + v.size());
    // Fix the arbitrary phase: largest amplitude real positive.
    std::size_t best = 0;
    for (std::size_t i = 1; i < amps.size(); ++i) {
        if (std::abs(amps[i]) > std::abs(amps[best]) + 1e-12) {
            best = i;
        }
    }
    const cplx phase = std::abs(amps[best]) > 0 ? std::conj(amps[best]) /
                                                      std::abs(amps[best])
                                                : cplx{1.0};
    for (cplx &a : amps) {
        a *= phase;
    }
    StateVector ground = StateVector::from_amplitudes(std::move(amps));
    ground.normalize();
    return {solver.eigenvalues()(0), std::move(ground)};
}

double vqe_cost(const Circuit &circuit, const PauliSum &h) {
    return evaluate_cost(circuit, Problem{VqeProblem{h}});
}

AutoencoderProblem make_autoencoder_problem(std::vector<StateVector> states,
                                            int n_trash,
                                            CompressionCost variant) {
    AutoencoderProblem p;
    p.weights.assign(states.size(),
                     states.empty() ? 0.0 : 1.0 / static_cast<double>(states.size()));
    p.states = std::move(states);
    p.n_trash = n_trash;
    p.variant = variant;
    validate_problem(p);
    return p;
}

double autoencoder_cost(const Circuit &circuit,
                        const AutoencoderProblem &problem) {
    return evaluate_cost(circuit, Problem{problem});
}

double encode_decode_fidelity(const Circuit &encoder, const StateVector &state,
                              int n_trash) {
    const int n = state.n_qubits();
    if (n_trash < 1 || n_trash >= n) {
        throw InvalidProblemError("trash size out of range");
    }
    // The decoder is unitary, so the fidelity can be taken after encoding:
    // F = <phi| (rho_A (x) |0><0|_B) |phi>, phi = V|psi>.
    const StateVector phi = apply_circuit(state, encoder);
    const std::size_t dim_b = std::size_t{1} << n_trash;
    const std::size_t dim_a = std::size_t{1} << (n - n_trash);
    // phi index = a * dim_b + b with a on the leading qubits.
    Eigen::MatrixXcd c(static_cast<Eigen::Index>(dim_a),
                       static_cast<Eigen::Index>(dim_b));
    for (std::size_t a = 0; a < dim_a; ++a) {
        for (std::size_t b = 0; b < dim_b; ++b) {
            c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                phi[a * dim_b + b];
        }
    }
    const Eigen::MatrixXcd rho_a = c * c.adjoint();
    const Eigen::VectorXcd kept = c.col(0);
    const cplx f = kept.adjoint() * rho_a * kept;
    return std::clamp(f.real(), 0.0, 1.0);
}

double compilation_cost(const Circuit &circuit, const CompilationProblem &problem) {
    return evaluate_cost(circuit, Problem{problem});
}

Eigen::MatrixXcd qft_unitary(int n) {
    if (n < 1 || n > 12) {
        throw TooLargeError("QFT target limited to 1..12 qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            // Reduce the exponent first so large n keeps full accuracy.
            const auto e = static_cast<double>((j * k) % dim);
            u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                std::polar(norm, 2.0 * std::numbers::pi * e / static_cast<double>(dim));
        }
    }
    return u;
}

CompilationProblem build_compilation_training_set(const Eigen::MatrixXcd &target,
                                                  int count, std::uint64_t seed) {
    const auto dim = static_cast<std::size_t>(target.rows());
    if (dim < 2 || target.cols() != target.rows() || (dim & (dim - 1)) != 0) {
        throw DimensionMismatchError("target must be a 2^n x 2^n matrix");
    }
    if (count < 1 || static_cast<std::size_t>(count) > dim) {
        throw InvalidProblemError("training-set size " + std::to_string(count) +
                                  " outside [1, " + std::to_string(dim) + "]");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const kernels::KernelSet &k = kernels::active();

    CompilationProblem out;
    for (int j = 0; j < count; ++j) {
        std::vector<cplx> v(dim);
        for (cplx &a : v) {
            const double re = normal(rng);
            const double im = normal(rng);
            a = {re, im};
        }
        // Two rounds of modified Gram-Schmidt.
        for (int round = 0; round < 2; ++round) {
            for (const StateVector &u : out.inputs) {
                const cplx proj = k.dot(u.amplitudes(), v);
                k.axpy(v, u.amplitudes(), -proj);
            }
        }
        StateVector s = StateVector::from_amplitudes(std::move(v));
        s.normalize();
        out.inputs.push_back(std::move(s));
    }
    out.n_qubits = out.inputs.front().n_qubits();
    for (const StateVector &in : out.inputs) {
        Eigen::Map<const Eigen::VectorXcd> x(in.amplitudes().data(),
                                             static_cast<Eigen::Index>(dim));
        const Eigen::VectorXcd y = target * x;
        out.targets.push_back(StateVector::from_amplitudes(
            std::vector<cplx>(y.data(), y.data() + y.size())));
    }
    return out;
}

CompilationProblem build_compilation_training_set(int n, int count,
                                                  std::uint64_t seed) {
    return build_compilation_training_set(qft_unitary(n), count, seed);
}

double diagnostic_unitary_distance(const Circuit &circuit,
                                   const Eigen::MatrixXcd &target) {
    const Eigen::MatrixXcd v = circuit_to_unitary(circuit);
    if (v.rows() != target.rows() || v.cols() != target.cols()) {
        throw DimensionMismatchError("target unitary has the wrong size");
    }
    return (target - v).squaredNorm();
}

} // namespace vans
