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
 * Run configuration for the command-line front end.
 *
 * Configs are JSON documents. Sections may be nested objects or dotted keys,
 * so `{"optimizer": {"max_steps": 500}}` and `{"optimizer.max_steps": 500}`
 * mean the same thing. Unknown keys are rejected.
 */
#pragma once

#include "vans/circuit.hpp"
#include "vans/problem.hpp"
#include "vans/vans.hpp"

#include <json.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vans::cli {

struct ProblemSpec {
    /// tfim | xxz | pauli-file | h2-autoencoder | states | qft | unitary-file
    std::string kind = "tfim";
    int n = 4;
    double J = 1.0;
    double g = 1.0;
    double delta = 1.0;
    /// Pauli-sum file (pauli-file) or unitary column file (unitary-file).
    std::filesystem::path file;

    // Autoencoder.
    std::filesystem::path hamiltonian_dir;
    std::vector<std::string> train_bonds;
    std::vector<std::string> test_bonds;
    std::filesystem::path train_file;
    std::filesystem::path test_file;
    int n_trash = 2;
    CompressionCost cost = CompressionCost::Local;

    // Compilation.
    int n_samples = 0; ///< 0 means 2^n
    std::uint64_t training_seed = 1234;
};

struct AnsatzSpec {
    /// product | hea | file
    std::string kind = "product";
    int layers = 2;
    std::filesystem::path file;
};

struct RunConfig {
    ProblemSpec problem;
    AnsatzSpec ansatz;
    VansConfig vans;
    /// Stop a VQE run once |E - E0| / |E0| falls to this value.
    std::optional<double> stop_relative_error;
    std::vector<std::uint64_t> seeds{0, 1, 2};
    std::filesystem::path out;
    std::vector<int> baseline_layers{2, 5};
    /// The document the config was read from, flattened to dotted keys.
    std::map<std::string, nlohmann::json> entries;
};

enum class ProblemFamily { Vqe, Autoencoder, Compilation };

[[nodiscard]] ProblemFamily family_of(const std::string &kind);

/// Nested objects become dotted keys; arrays and scalars are leaves.
[[nodiscard]] std::map<std::string, nlohmann::json>
flatten(const nlohmann::json &doc);

/// Relative paths resolve against `base_dir`. Throws ConfigError.
[[nodiscard]] RunConfig parse_config(const nlohmann::json &doc,
                                     const std::filesystem::path &base_dir = {});
[[nodiscard]] RunConfig load_config(const std::filesystem::path &path);

/// Effective configuration (after overrides) as a nested document.
[[nodiscard]] nlohmann::json to_json(const RunConfig &config);

/// "1,2,3" -> {1, 2, 3}. Throws ConfigError.
[[nodiscard]] std::vector<std::uint64_t> parse_seed_list(const std::string &text);

/// Everything a command needs to run and report on a problem.
struct BuiltProblem {
    Problem problem;
    ProblemFamily family;
    int n_qubits = 0;
    /// Dense ground energy for VQE problems with n <= 12.
    std::optional<double> exact_energy;
    /// Held-out autoencoder states.
    std::optional<AutoencoderProblem> test;
    /// Compilation target.
    std::optional<Eigen::MatrixXcd> target;
};

[[nodiscard]] BuiltProblem build_problem(const ProblemSpec &spec);

/// Initial circuit. Compilation problems also get a trainable global phase.
[[nodiscard]] Circuit build_initial(const AnsatzSpec &spec, const BuiltProblem &problem);

/// VansConfig for one seed, with family defaults (dictionary, stopping
/// target) filled in.
[[nodiscard]] VansConfig vans_config_for(const RunConfig &config,
                                         const BuiltProblem &problem,
                                         std::uint64_t seed);

} // namespace vans::cli
