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
#include "vans/optimizer.hpp"

#include "vans/error.hpp"
#include "vans/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vans {

void OptimizerConfig::validate() const {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("optimizer.learning_rate must be positive");
    }
    if (max_steps < 1) {
        throw ConfigError("optimizer.max_steps must be at least 1");
    }
    if (!(convergence_tol > 0.0)) {
        throw ConfigError("optimizer.convergence_tol must be positive");
    }
}

namespace {

constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kEps = 1e-8;

void check_finite(const CostGradient &cg, std::size_t step) {
    bool ok = std::isfinite(cg.cost);
    for (double g : cg.gradient) {
        ok = ok && std::isfinite(g);
    }
    if (!ok) {
        throw OptimizerDivergenceError("non-finite cost or gradient at Adam step " +
                                       std::to_string(step));
    }
}

} // namespace

OptimizeResult optimize_continuous(const Circuit &circuit, const Problem &problem,
                                   const OptimizerConfig &config) {
    config.validate();
    Circuit work = circuit;
    OptimizeResult best{work.params(), 0.0, 0};
    if (work.params().empty()) {
        best.cost = evaluate_cost(work, problem);
        if (!std::isfinite(best.cost)) {
            throw OptimizerDivergenceError("non-finite cost");
        }
        return best;
    }

    std::vector<double> theta = work.params();
    std::vector<double> m(theta.size(), 0.0);
    std::vector<double> v(theta.size(), 0.0);
    double b1t = 1.0;
    double b2t = 1.0;
    double prev = 0.0;
    std::size_t calm = 0;

    for (std::size_t step = 0;; ++step) {
        work.set_params(theta);
        const CostGradient cg = cost_and_gradient(work, problem);
        check_finite(cg, step);
        if (step == 0 || cg.cost < best.cost) {
            best.params = theta;
            best.cost = cg.cost;
        }
        if (step > 0) {
            const double change = std::abs(cg.cost - prev);
            calm = change == 0.0 || change < config.convergence_tol * std::abs(prev)
                       ? calm + 1
                       : 0;
        }
        prev = cg.cost;
        best.steps = step;
        if (step == config.max_steps || calm >= config.patience) {
            break;
        }

        b1t *= kBeta1;
        b2t *= kBeta2;
        for (std::size_t i = 0; i < theta.size(); ++i) {
            const double g = cg.gradient[i];
            m[i] = kBeta1 * m[i] + (1.0 - kBeta1) * g;
            v[i] = kBeta2 * v[i] + (1.0 - kBeta2) * g * g;
            const double mhat = m[i] / (1.0 - b1t);
            const double vhat = v[i] / (1.0 - b2t);
            theta[i] -= config.learning_rate * mhat / (std::sqrt(vhat) + kEps);
        }
    }
    return best;
}

bool metropolis_accept(double new_cost, double old_cost, double initial_cost,
                       double beta, Rng &rng) {
    const double delta = new_cost - old_cost;
    if (delta <= 0.0) {
        return true;
    }
    // C0 = 0 would make every uphill move impossible; clamp the scale.
    const double scale = std::max(std::abs(initial_cost), 1e-12);
    const double p = std::exp(-beta * delta / scale);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < p;
}

} // namespace vans
