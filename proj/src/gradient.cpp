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
#include "vans/kernels.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace vans {

int problem_qubits(const Problem &problem) {
    return std::visit(
        [](const auto &p) -> int {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, VqeProblem>) {
                return p.hamiltonian.n_qubits();
            } else if constexpr (std::is_same_v<T, AutoencoderProblem>) {
                return p.states.empty() ? 0 : p.states.front().n_qubits();
            } else {
                return p.n_qubits;
            }
        },
        problem);
}

bool starts_from_zero_state(const Problem &problem) {
    return std::holds_alternative<VqeProblem>(problem);
}

void validate_problem(const Problem &problem) {
    if (const auto *ae = std::get_if<AutoencoderProblem>(&problem)) {
        if (ae->states.empty() || ae->weights.size() != ae->states.size()) {
            throw InvalidProblemError(
                "autoencoder needs one weight per training state");
        }
        const int n = ae->states.front().n_qubits();
        if (ae->n_trash < 1 || ae->n_trash >= n) {
            throw InvalidProblemError("trash size " +
                                      std::to_string(ae->n_trash) +
                                      " outside [1, " + std::to_string(n) + ")");
        }
        double total = 0.0;
        for (double w : ae->weights) {
            if (!(w > 0.0)) {
                throw InvalidProblemError("autoencoder weights must be positive");
            }
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            throw InvalidProblemError("autoencoder weights must sum to 1");
        }
        for (const StateVector &s : ae->states) {
            if (s.n_qubits() != n) {
                throw InvalidProblemError("training states differ in size");
            }
        }
    } else if (const auto *cp = std::get_if<CompilationProblem>(&problem)) {
        if (cp->inputs.size() != cp->targets.size() || cp->inputs.empty()) {
            throw InvalidProblemError(
                "compilation needs matching, non-empty input/target lists");
        }
        for (std::size_t i = 0; i < cp->inputs.size(); ++i) {
            if (cp->inputs[i].n_qubits() != cp->n_qubits ||
                cp->targets[i].n_qubits() != cp->n_qubits) {
                throw InvalidProblemError("training pair has the wrong size");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (std::abs(inner(cp->inputs[j], cp->inputs[i])) > 1e-10) {
                    throw InvalidProblemError(
                        "compilation inputs are not pairwise orthogonal");
                }
            }
        }
    }
}

namespace {

/// Diagonal weight of the complement of the "trash is |0>" projector at
/// basis index `b`. Summing the rejected probability instead of computing
/// 1 - kept avoids cancellation, so tiny costs keep their relative precision.
std::vector<double> trash_weights(int n, int n_trash, CompressionCost variant) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> w(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        int ones = 0;
        for (int q = n - n_trash; q < n; ++q) {
            ones += (b & qubit_mask(n, q)) ? 1 : 0;
        }
        if (variant == CompressionCost::Global) {
            w[b] = ones > 0 ? 1.0 : 0.0;
        } else {
            w[b] = static_cast<double>(ones) / n_trash;
        }
    }
    return w;
}

/**
 * A cost written as a sum over circuit outputs phi_i = V|in_i>:
 *   C = sum_i f_i(phi_i),
 * with adjoint seeds lambda_i = dC/d(conj phi_i).
 */
class Objective {
  public:
    explicit Objective(const Problem &problem) : problem_(problem) {
        validate_problem(problem);
        std::visit(
            [this](const auto &p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, VqeProblem>) {
                    inputs_.emplace_back(p.hamiltonian.n_qubits());
                } else if constexpr (std::is_same_v<T, AutoencoderProblem>) {
                    inputs_ = p.states;
                    trash_ = trash_weights(p.states.front().n_qubits(),
                                           p.n_trash, p.variant);
                } else {
                    inputs_ = p.inputs;
                }
            },
            problem_);
    }

    [[nodiscard]] const std::vector<StateVector> &inputs() const {
        return inputs_;
    }

    /// Contribution of output `i`; fills `seed` when non-null.
    double term(std::size_t i, const StateVector &phi, StateVector *seed) const {
        const kernels::KernelSet &k = kernels::active();
        if (const auto *vqe = std::get_if<VqeProblem>(&problem_)) {
            StateVector hphi = vqe->hamiltonian.apply(phi);
            const cplx e = k.dot(phi.amplitudes(), hphi.amplitudes());
            if (std::abs(e.imag()) > 1e-10) {
                throw Error("energy has imaginary part " +
                            std::to_string(e.imag()));
            }
            if (seed) {
                *seed = std::move(hphi);
            }
            return e.real();
        }
        if (const auto *ae = std::get_if<AutoencoderProblem>(&problem_)) {
            const double p = ae->weights[i];
            double rejected = 0.0;
            for (std::size_t b = 0; b < phi.dim(); ++b) {
                rejected += trash_[b] * std::norm(phi[b]);
            }
            if (seed) {
                *seed = phi;
                for (std::size_t b = 0; b < phi.dim(); ++b) {
                    (*seed)[b] *= p * trash_[b];
                }
            }
            return p * rejected;
        }
        const auto &cp = std::get<CompilationProblem>(problem_);
        StateVector diff = phi;
        k.axpy(diff.amplitudes(), cp.targets[i].amplitudes(), cplx{-1.0, 0.0});
        const double d = k.norm2(diff.amplitudes());
        if (seed) {
            *seed = std::move(diff);
        }
        return d;
    }

  private:
    const Problem &problem_;
    std::vector<StateVector> inputs_;
    std::vector<double> trash_;
};

void check_sizes(const Circuit &circuit, const Problem &problem) {
    if (circuit.n_qubits() != problem_qubits(problem)) {
        throw DimensionMismatchError(
            "circuit has " + std::to_string(circuit.n_qubits()) +
            " qubits, problem has " + std::to_string(problem_qubits(problem)));
    }
}

} // namespace

double evaluate_cost(const Circuit &circuit, const Problem &problem) {
    check_sizes(circuit, problem);
    const Objective obj(problem);
    double total = 0.0;
    for (std::size_t i = 0; i < obj.inputs().size(); ++i) {
        const StateVector phi = apply_circuit(obj.inputs()[i], circuit);
        total += obj.term(i, phi, nullptr);
    }
    return total;
}

CostGradient cost_and_gradient(const Circuit &circuit, const Problem &problem) {
    check_sizes(circuit, problem);
    const Objective obj(problem);
    const int n = circuit.n_qubits();
    const auto prims = detail::lower(circuit);
    const auto &params = circuit.params();
    auto angle = [&](const detail::Prim &p) {
        return p.slot >= 0 ? params[static_cast<std::size_t>(p.slot)] : 0.0;
    };

    CostGradient out;
    out.cost = 0.0;
    out.gradient.assign(params.size(), 0.0);
    const kernels::KernelSet &k = kernels::active();

    StateVector seed(n);
    StateVector scratch(n);
    for (std::size_t i = 0; i < obj.inputs().size(); ++i) {
        StateVector phi = apply_circuit(obj.inputs()[i], circuit);
        out.cost += obj.term(i, phi, &seed);
        for (std::size_t g = prims.size(); g-- > 0;) {
            const detail::Prim &p = prims[g];
            if (p.slot >= 0) {
                std::copy(phi.amplitudes().begin(), phi.amplitudes().end(),
                          scratch.amplitudes().begin());
                detail::apply_generator(scratch.amplitudes(), n, p);
                const cplx z = k.dot(seed.amplitudes(), scratch.amplitudes());
                out.gradient[static_cast<std::size_t>(p.slot)] += z.imag();
            }
            const double t = -angle(p);
            detail::apply_prim(phi.amplitudes(), n, p, t);
            detail::apply_prim(seed.amplitudes(), n, p, t);
        }
    }
    return out;
}

std::vector<double> cost_gradient(const Circuit &circuit,
                                  const Problem &problem) {
    return cost_and_gradient(circuit, problem).gradient;
}

} // namespace vans
