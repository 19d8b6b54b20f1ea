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
#include "vans/cli/config.hpp"

#include "vans/error.hpp"
#include "vans/pauli.hpp"
#include "vans/problems.hpp"
#include "vans/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace vans::cli {

namespace fs = std::filesystem;
using nlohmann::json;

ProblemFamily family_of(const std::string &kind) {
    if (kind == "tfim" || kind == "xxz" || kind == "pauli-file") {
        return ProblemFamily::Vqe;
    }
    if (kind == "h2-autoencoder" || kind == "states") {
        return ProblemFamily::Autoencoder;
    }
    if (kind == "qft" || kind == "unitary-file") {
        return ProblemFamily::Compilation;
    }
    throw ConfigError("unknown problem.kind '" + kind + "'");
}

namespace {

void flatten_into(const json &node, const std::string &prefix,
                  std::map<std::string, json> &out) {
    if (node.is_object()) {
        for (const auto &[key, value] : node.items()) {
            flatten_into(value, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    if (prefix.empty()) {
        throw ConfigError("config must be a JSON object");
    }
    if (out.count(prefix) != 0) {
        throw ConfigError("duplicate config key '" + prefix + "'");
    }
    out[prefix] = node;
}

const std::set<std::string> &known_keys() {
    static const std::set<std::string> keys = {
        "problem.kind", "problem.n", "problem.J", "problem.g", "problem.delta",
        "problem.file", "problem.hamiltonian_dir", "problem.train_bonds",
        "problem.test_bonds", "problem.train_file", "problem.test_file",
        "problem.n_trash", "problem.cost", "problem.n_samples",
        "problem.training_seed",
        "ansatz.kind", "ansatz.layers", "ansatz.file",
        "vans.max_outer_iters", "vans.beta", "vans.accept_equal",
        "vans.insertions_per_iter", "vans.randomize_initial", "vans.target_cost",
        "vans.stop_relative_error",
        "insertion.epsilon_init", "insertion.connectivity_bias",
        "insertion.block_weights", "insertion.position_mode",
        "insertion.dictionary",
        "simplify.threshold", "simplify.max_candidates", "simplify.order",
        "simplify.cost_aware",
        "optimizer.learning_rate", "optimizer.max_steps",
        "optimizer.convergence_tol", "optimizer.patience",
        "seeds", "out", "baseline.layers",
    };
    return keys;
}

/// Typed access with the key named in every error.
class Reader {
  public:
    Reader(const std::map<std::string, json> &entries, fs::path base)
        : entries_(entries), base_(std::move(base)) {}

    template <typename T> void get(const std::string &key, T &target) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return;
        }
        try {
            target = it->second.get<T>();
        } catch (const json::exception &e) {
            throw ConfigError("bad value for '" + key + "': " + e.what());
        }
    }

    void get_path(const std::string &key, fs::path &target) const {
        std::string text;
        get(key, text);
        if (!text.empty()) {
            const fs::path p(text);
            target = p.is_absolute() || base_.empty() ? p : base_ / p;
        }
    }

    /// Accepts numbers or strings ("0.74" and 0.74 name the same file).
    void get_labels(const std::string &key, std::vector<std::string> &target) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return;
        }
        if (!it->second.is_array()) {
            throw ConfigError("'" + key + "' must be an array");
        }
        target.clear();
        for (const json &v : it->second) {
            if (v.is_string()) {
                target.push_back(v.get<std::string>());
            } else if (v.is_number()) {
                std::ostringstream s;
                s.setf(std::ios::fixed);
                s.precision(2);
                s << v.get<double>();
                target.push_back(s.str());
            } else {
                throw ConfigError("'" + key + "' entries must be numbers or strings");
            }
        }
    }

  private:
    const std::map<std::string, json> &entries_;
    fs::path base_;
};

template <typename T> void require(bool ok, const std::string &message) {
    if (!ok) {
        throw T(message);
    }
}

} // namespace

std::map<std::string, json> flatten(const json &doc) {
    std::map<std::string, json> out;
    flatten_into(doc, "", out);
    return out;
}

RunConfig parse_config(const json &doc, const fs::path &base_dir) {
    RunConfig cfg;
    cfg.entries = flatten(doc);
    for (const auto &[key, value] : cfg.entries) {
        if (known_keys().count(key) == 0) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    const Reader r(cfg.entries, base_dir);

    ProblemSpec &p = cfg.problem;
    r.get("problem.kind", p.kind);
    (void)family_of(p.kind);
    r.get("problem.n", p.n);
    r.get("problem.J", p.J);
    r.get("problem.g", p.g);
    r.get("problem.delta", p.delta);
    r.get_path("problem.file", p.file);
    p.hamiltonian_dir = fs::path(VANS_DATA_DIR) / "h2";
    r.get_path("problem.hamiltonian_dir", p.hamiltonian_dir);
    r.get_labels("problem.train_bonds", p.train_bonds);
    r.get_labels("problem.test_bonds", p.test_bonds);
    r.get_path("problem.train_file", p.train_file);
    r.get_path("problem.test_file", p.test_file);
    r.get("problem.n_trash", p.n_trash);
    std::string cost = "local";
    r.get("problem.cost", cost);
    require<ConfigError>(cost == "local" || cost == "global",
                         "problem.cost must be 'local' or 'global'");
    p.cost = cost == "local" ? CompressionCost::Local : CompressionCost::Global;
    r.get("problem.n_samples", p.n_samples);
    r.get("problem.training_seed", p.training_seed);
    require<ConfigError>(p.n >= 1 && p.n <= kMaxStateQubits, "problem.n out of range");

    r.get("ansatz.kind", cfg.ansatz.kind);
    r.get("ansatz.layers", cfg.ansatz.layers);
    r.get_path("ansatz.file", cfg.ansatz.file);
    require<ConfigError>(cfg.ansatz.kind == "product" || cfg.ansatz.kind == "hea" ||
                             cfg.ansatz.kind == "file",
                         "ansatz.kind must be product, hea or file");
    require<ConfigError>(cfg.ansatz.layers >= 0, "ansatz.layers must be >= 0");

    VansConfig &v = cfg.vans;
    r.get("vans.max_outer_iters", v.max_outer_iters);
    r.get("vans.beta", v.beta);
    r.get("vans.accept_equal", v.accept_equal);
    r.get("vans.insertions_per_iter", v.insertions_per_iter);
    r.get("vans.randomize_initial", v.randomize_initial);
    if (cfg.entries.count("vans.target_cost") != 0) {
        double t = 0.0;
        r.get("vans.target_cost", t);
        v.target_cost = t;
    }
    if (cfg.entries.count("vans.stop_relative_error") != 0) {
        double t = 0.0;
        r.get("vans.stop_relative_error", t);
        cfg.stop_relative_error = t;
    }

    r.get("insertion.epsilon_init", v.insertion.epsilon_init);
    r.get("insertion.connectivity_bias", v.insertion.connectivity_bias);
    r.get("insertion.block_weights", v.insertion.block_weights);
    std::string position = "append";
    r.get("insertion.position_mode", position);
    require<ConfigError>(position == "append" || position == "anywhere",
                         "insertion.position_mode must be 'append' or 'anywhere'");
    v.insertion.position =
        position == "append" ? PositionMode::Append : PositionMode::Anywhere;

    r.get("simplify.threshold", v.simplify.threshold);
    r.get("simplify.max_candidates", v.simplify.max_candidates);
    r.get("simplify.cost_aware", v.simplify.enable_cost_aware);
    std::string order = "gradient";
    r.get("simplify.order", order);
    require<ConfigError>(order == "gradient" || order == "position",
                         "simplify.order must be 'gradient' or 'position'");
    v.simplify.order = order == "gradient" ? CandidateOrder::GradientMagnitude
                                           : CandidateOrder::Position;

    r.get("optimizer.learning_rate", v.optimizer.learning_rate);
    r.get("optimizer.max_steps", v.optimizer.max_steps);
    r.get("optimizer.convergence_tol", v.optimizer.convergence_tol);
    r.get("optimizer.patience", v.optimizer.patience);

    r.get("seeds", cfg.seeds);
    require<ConfigError>(!cfg.seeds.empty(), "seed list must not be empty");
    r.get_path("out", cfg.out);
    r.get("baseline.layers", cfg.baseline_layers);

    std::string dictionary = "auto";
    r.get("insertion.dictionary", dictionary);
    require<ConfigError>(dictionary == "auto" || dictionary == "standard" ||
                             dictionary == "kak",
                         "insertion.dictionary must be auto, standard or kak");
    if (dictionary == "kak" ||
        (dictionary == "auto" && family_of(p.kind) == ProblemFamily::Compilation)) {
        v.insertion.dictionary = {kak_block()};
    }
    // Echo resolved paths so a run can be rebuilt from its own summary.
    const std::pair<const char *, const fs::path *> paths[] = {
        {"problem.file", &p.file},           {"problem.hamiltonian_dir", &p.hamiltonian_dir},
        {"problem.train_file", &p.train_file}, {"problem.test_file", &p.test_file},
        {"ansatz.file", &cfg.ansatz.file},   {"out", &cfg.out},
    };
    for (const auto &[key, path] : paths) {
        if (cfg.entries.count(key) != 0) {
            cfg.entries[key] = fs::absolute(*path).lexically_normal().string();
        }
    }
    try {
        v.validate();
    } catch (const ConfigError &) {
        throw;
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

RunConfig load_config(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error &e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " +
                          e.what());
    }
    return parse_config(doc, path.parent_path());
}

json to_json(const RunConfig &config) {
    const ProblemSpec &p = config.problem;
    const VansConfig &v = config.vans;
    const auto path = [](const fs::path &x) {
        return x.empty() ? std::string() : fs::absolute(x).lexically_normal().string();
    };
    json doc;
    doc["problem"] = {{"kind", p.kind}, {"n", p.n}, {"J", p.J}, {"g", p.g},
                      {"delta", p.delta}, {"n_trash", p.n_trash},
                      {"cost", p.cost == CompressionCost::Local ? "local" : "global"},
                      {"n_samples", p.n_samples}, {"training_seed", p.training_seed},
                      {"hamiltonian_dir", path(p.hamiltonian_dir)}};
    for (const auto &[key, value] : {std::pair{"file", &p.file},
                                     std::pair{"train_file", &p.train_file},
                                     std::pair{"test_file", &p.test_file}}) {
        if (!value->empty()) {
            doc["problem"][key] = path(*value);
        }
    }
    if (!p.train_bonds.empty()) {
        doc["problem"]["train_bonds"] = p.train_bonds;
    }
    if (!p.test_bonds.empty()) {
        doc["problem"]["test_bonds"] = p.test_bonds;
    }
    doc["ansatz"] = {{"kind", config.ansatz.kind}, {"layers", config.ansatz.layers}};
    if (!config.ansatz.file.empty()) {
        doc["ansatz"]["file"] = path(config.ansatz.file);
    }
    doc["vans"] = {{"max_outer_iters", v.max_outer_iters},
                   {"beta", v.beta},
                   {"accept_equal", v.accept_equal},
                   {"insertions_per_iter", v.insertions_per_iter},
                   {"randomize_initial", v.randomize_initial}};
    if (v.target_cost) {
        doc["vans"]["target_cost"] = *v.target_cost;
    }
    if (config.stop_relative_error) {
        doc["vans"]["stop_relative_error"] = *config.stop_relative_error;
    }
    const auto dict = config.entries.find("insertion.dictionary");
    doc["insertion"] = {
        {"epsilon_init", v.insertion.epsilon_init},
        {"connectivity_bias", v.insertion.connectivity_bias},
        {"position_mode", v.insertion.position == PositionMode::Append ? "append" : "anywhere"},
        {"dictionary", dict == config.entries.end() ? json("auto") : dict->second}};
    if (!v.insertion.block_weights.empty()) {
        doc["insertion"]["block_weights"] = v.insertion.block_weights;
    }
    doc["simplify"] = {
        {"threshold", v.simplify.threshold},
        {"max_candidates", v.simplify.max_candidates},
        {"order", v.simplify.order == CandidateOrder::GradientMagnitude ? "gradient" : "position"},
        {"cost_aware", v.simplify.enable_cost_aware}};
    doc["optimizer"] = {{"learning_rate", v.optimizer.learning_rate},
                        {"max_steps", v.optimizer.max_steps},
                        {"convergence_tol", v.optimizer.convergence_tol},
                        {"patience", v.optimizer.patience}};
    doc["seeds"] = config.seeds;
    doc["baseline"]["layers"] = config.baseline_layers;
    if (!config.out.empty()) {
        doc["out"] = path(config.out);
    }
    return doc;
}

std::vector<std::uint64_t> parse_seed_list(const std::string &text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (item.empty() || used != item.size() || item.front() == '-') {
            throw ConfigError("bad seed '" + item + "' in '" + text + "'");
        }
        seeds.push_back(v);
    }
    if (seeds.empty()) {
        throw ConfigError("empty seed list");
    }
    return seeds;
}

namespace {

std::vector<StateVector> h2_ground_states(const ProblemSpec &spec,
                                          const std::vector<std::string> &bonds) {
    std::vector<StateVector> states;
    for (const std::string &b : bonds) {
        const fs::path file = spec.hamiltonian_dir / ("h2_" + b + ".txt");
        if (!fs::exists(file)) {
            throw ConfigError("missing Hamiltonian file '" + file.string() + "'");
        }
        states.push_back(exact_ground(load_pauli_sum(file.string())).ground_state);
    }
    return states;
}

void require_file(const fs::path &path, const std::string &key) {
    if (path.empty()) {
        throw ConfigError(key + " is required");
    }
    if (!fs::exists(path)) {
        throw ConfigError(key + " '" + path.string() + "' does not exist");
    }
}

} // namespace

BuiltProblem build_problem(const ProblemSpec &spec) {
    BuiltProblem out{VqeProblem{PauliSum(1)}, family_of(spec.kind), 0, {}, {}, {}};
    switch (out.family) {
    case ProblemFamily::Vqe: {
        PauliSum h(1);
        if (spec.kind == "tfim") {
            h = tfim_hamiltonian(spec.n, spec.J, spec.g);
        } else if (spec.kind == "xxz") {
            h = xxz_hamiltonian(spec.n, spec.delta, spec.g);
        } else {
            require_file(spec.file, "problem.file");
            h = load_pauli_sum(spec.file.string());
        }
        if (h.n_qubits() <= kMaxDenseQubits) {
            out.exact_energy = exact_ground(h).ground_energy;
        }
        out.n_qubits = h.n_qubits();
        out.problem = VqeProblem{std::move(h)};
        break;
    }
    case ProblemFamily::Autoencoder: {
        std::vector<StateVector> train;
        std::vector<StateVector> test;
        if (spec.kind == "h2-autoencoder") {
            const std::vector<std::string> train_bonds =
                spec.train_bonds.empty()
                    ? std::vector<std::string>{"0.50", "0.70", "0.90", "1.20", "1.60", "2.00"}
                    : spec.train_bonds;
            const std::vector<std::string> test_bonds =
                spec.test_bonds.empty()
                    ? std::vector<std::string>{"0.45", "0.55", "0.60", "0.65", "0.74",
                                               "0.80", "1.00", "1.10", "1.40", "1.80"}
                    : spec.test_bonds;
            train = h2_ground_states(spec, train_bonds);
            test = h2_ground_states(spec, test_bonds);
        } else {
            require_file(spec.train_file, "problem.train_file");
            train = load_states(spec.train_file.string());
            if (!spec.test_file.empty()) {
                require_file(spec.test_file, "problem.test_file");
                test = load_states(spec.test_file.string());
            }
        }
        if (train.empty()) {
            throw ConfigError("autoencoder training set is empty");
        }
        out.n_qubits = train.front().n_qubits();
        if (!test.empty()) {
            out.test = make_autoencoder_problem(std::move(test), spec.n_trash, spec.cost);
        }
        out.problem = make_autoencoder_problem(std::move(train), spec.n_trash, spec.cost);
        break;
    }
    case ProblemFamily::Compilation: {
        Eigen::MatrixXcd target;
        if (spec.kind == "qft") {
            target = qft_unitary(spec.n);
        } else {
            require_file(spec.file, "problem.file");
            const auto columns = load_states(spec.file.string());
            const Eigen::Index dim = static_cast<Eigen::Index>(columns.size());
            if (columns.empty() || columns.front().dim() != columns.size()) {
                throw ConfigError("unitary file must list 2^n columns of 2^n amplitudes");
            }
            target.resize(dim, dim);
            for (Eigen::Index j = 0; j < dim; ++j) {
                for (Eigen::Index i = 0; i < dim; ++i) {
                    target(i, j) = columns[static_cast<std::size_t>(j)]
                                          [static_cast<std::size_t>(i)];
                }
            }
            const double defect =
                (target.adjoint() * target - Eigen::MatrixXcd::Identity(dim, dim)).norm();
            if (defect > 1e-8) {
                throw ConfigError("target in '" + spec.file.string() + "' is not unitary");
            }
        }
        const int n = static_cast<int>(std::lround(std::log2(target.rows())));
        const int count = spec.n_samples > 0 ? spec.n_samples : (1 << n);
        out.n_qubits = n;
        out.problem = build_compilation_training_set(target, count, spec.training_seed);
        out.target = std::move(target);
        break;
    }
    }
    validate_problem(out.problem);
    return out;
}

Circuit build_initial(const AnsatzSpec &spec, const BuiltProblem &problem) {
    Circuit c(problem.n_qubits);
    if (spec.kind == "product") {
        c = build_product_ansatz(problem.n_qubits);
    } else if (spec.kind == "hea") {
        c = build_hea(problem.n_qubits, spec.layers);
    } else {
        require_file(spec.file, "ansatz.file");
        c = load_circuit(spec.file.string());
        if (c.n_qubits() != problem.n_qubits) {
            throw ConfigError("ansatz file has " + std::to_string(c.n_qubits()) +
                              " qubits, problem has " +
                              std::to_string(problem.n_qubits));
        }
    }
    const bool has_phase = std::any_of(c.gates().begin(), c.gates().end(),
                                       [](const Gate &g) { return g.kind == GateKind::Phase; });
    if (problem.family == ProblemFamily::Compilation && !has_phase) {
        c.phase(0.0);
    }
    return c;
}

VansConfig vans_config_for(const RunConfig &config, const BuiltProblem &problem,
                           std::uint64_t seed) {
    VansConfig v = config.vans;
    v.seed = seed;
    const bool kak_only = v.insertion.dictionary.size() == 1 &&
                          v.insertion.dictionary.front().arity == 2;
    if (kak_only && problem.n_qubits < 2) {
        v.insertion.dictionary = compilation_dictionary(problem.n_qubits);
        v.insertion.block_weights.clear();
    }
    if (config.stop_relative_error && problem.exact_energy) {
        v.target_cost = *problem.exact_energy +
                        *config.stop_relative_error * std::abs(*problem.exact_energy);
    }
    return v;
}

} // namespace vans::cli
