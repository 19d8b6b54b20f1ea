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
#include "vans/cli/commands.hpp"

#include "vans/cli/config.hpp"
#include "vans/cli/run_output.hpp"
#include "vans/error.hpp"
#include "vans/pauli.hpp"
#include "vans/problems.hpp"
#include "vans/simplification.hpp"
#include "vans/simulator.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>

namespace vans::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class VerificationError : public Error {
  public:
    using Error::Error;
};

RunConfig resolve(const CommonOptions &options, const std::string &command) {
    RunConfig cfg = options.config.empty() ? parse_config(json::object())
                                           : load_config(options.config);
    if (options.seeds) {
        cfg.seeds = parse_seed_list(*options.seeds);
    } else if (const char *env = std::getenv("VANS_SEED"); env && *env) {
        cfg.seeds = parse_seed_list(env);
    }
    if (options.max_iters) {
        cfg.vans.max_outer_iters = *options.max_iters;
    }
    if (!options.out.empty()) {
        cfg.out = options.out;
    }
    if (cfg.out.empty()) {
        cfg.out = fs::path("runs") / command;
    }
    return cfg;
}

fs::path seed_dir(const fs::path &run, std::uint64_t seed) {
    return run / ("seed_" + std::to_string(seed));
}

double neg_log_infidelity(double fidelity) {
    // Saturates at double precision.
    return -std::log10(std::max(1.0 - fidelity, 1e-16));
}

json fidelity_stats(const Circuit &encoder, const std::vector<StateVector> &states,
                    int n_trash) {
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const StateVector &s : states) {
        const double v = neg_log_infidelity(encode_decode_fidelity(encoder, s, n_trash));
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {{"mean", sum / static_cast<double>(states.size())}, {"min", lo}, {"max", hi}};
}

double relative_error(double e, double e0) { return std::abs((e - e0) / e0); }

void require_family(const BuiltProblem &p, ProblemFamily want, const std::string &cmd) {
    if (p.family != want) {
        throw ConfigError("problem.kind does not fit the '" + cmd + "' command");
    }
}

/// Shared driver: one VAns run per seed, per-seed files, a top-level summary.
template <typename Report>
int run_seeds(const std::string &command, const CommonOptions &options,
              ProblemFamily family, std::ostream &log, Report &&report) {
    RunConfig cfg = resolve(options, command);
    const BuiltProblem built = build_problem(cfg.problem);
    require_family(built, family, command);
    const Circuit initial = build_initial(cfg.ansatz, built);
    create_run_dir(cfg.out);
    const json echo = to_json(cfg);
    write_new_file(cfg.out / "config.json", dump(echo));

    json runs = json::array();
    std::size_t best = 0;
    for (std::size_t k = 0; k < cfg.seeds.size(); ++k) {
        const std::uint64_t seed = cfg.seeds[k];
        const VansConfig vcfg = vans_config_for(cfg, built, seed);
        std::vector<std::vector<double>> extra;
        std::vector<std::string> extra_names;
        const auto t0 = std::chrono::steady_clock::now();
        const VansResult result = run_vans(
            built.problem, initial, vcfg,
            [&](const TrajectoryRecord &, const Circuit &incumbent) {
                report.observe(built, incumbent, extra_names, extra);
            });
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const fs::path dir = seed_dir(cfg.out, seed);
        create_run_dir(dir);
        write_new_file(dir / "trajectory.csv", trajectory_csv(result.trajectory));
        write_new_file(dir / "best_circuit.txt", to_text(result.best_circuit));
        if (options.emit_gnuplot) {
            write_new_file(dir / "trajectory.dat",
                           gnuplot_columns(result.trajectory, extra_names, extra));
        }
        json s = {
            {"command", command},
            {"seed", seed},
            {"best_cost", result.best_cost},
            {"initial_cost", result.initial_cost},
            {"n_gates", result.best_circuit.size()},
            {"n_cnots", count_cnots(result.best_circuit)},
            {"n_two_qubit_gates", count_two_qubit_gates(result.best_circuit)},
            {"n_params", count_params(result.best_circuit)},
            {"accepted_moves", result.accepted_moves},
            {"outer_iters", result.trajectory.size()},
            {"wall_time_s", wall},
            {"circuit", (dir / "best_circuit.txt").filename().string()},
        };
        report.summarize(built, result, s);
        write_new_file(dir / "summary.json", dump(s));
        log << command << " seed " << seed << ": cost " << format_double(result.best_cost)
            << " (" << result.accepted_moves << " accepted, " << wall << " s)\n";
        runs.push_back(s);
        if (result.best_cost < runs[best]["best_cost"].get<double>()) {
            best = k;
        }
    }
    json summary = {
        {"command", command},
        {"k", cfg.seeds.size()},
        {"seeds", cfg.seeds},
        {"best_seed", runs[best]["seed"]},
        {"best_cost", runs[best]["best_cost"]},
        {"runs", runs},
        {"config", echo},
    };
    report.best(runs[best], summary);
    write_new_file(cfg.out / "summary.json", dump(summary));
    log << "wrote " << cfg.out.string() << "\n";
    if (options.verify && verify_run(cfg.out, log) != 0) {
        throw VerificationError("summary does not match the persisted circuits");
    }
    return kExitOk;
}

struct VqeReport {
    void observe(const BuiltProblem &, const Circuit &, std::vector<std::string> &,
                 std::vector<std::vector<double>> &) {}
    void summarize(const BuiltProblem &p, const VansResult &r, json &s) const {
        if (p.exact_energy) {
            s["exact_energy"] = *p.exact_energy;
            s["abs_error"] = r.best_cost - *p.exact_energy;
            s["relative_error"] = relative_error(r.best_cost, *p.exact_energy);
        }
    }
    void best(const json &run, json &summary) const {
        if (run.contains("relative_error")) {
            summary["exact_energy"] = run["exact_energy"];
            summary["best_relative_error"] = run["relative_error"];
        }
    }
};

struct AutoencoderReport {
    void observe(const BuiltProblem &p, const Circuit &incumbent,
                 std::vector<std::string> &names, std::vector<std::vector<double>> &extra) {
        if (!p.test) {
            return;
        }
        if (extra.empty()) {
            names = {"test_cost"};
            extra.resize(1);
        }
        extra[0].push_back(evaluate_cost(incumbent, *p.test));
    }
    void summarize(const BuiltProblem &p, const VansResult &r, json &s) const {
        const auto &train = std::get<AutoencoderProblem>(p.problem);
        s["train_cost"] = r.best_cost;
        s["train_fidelity_nlog"] = fidelity_stats(r.best_circuit, train.states, train.n_trash);
        if (p.test) {
            s["test_cost"] = evaluate_cost(r.best_circuit, *p.test);
            s["test_fidelity_nlog"] =
                fidelity_stats(r.best_circuit, p.test->states, p.test->n_trash);
        }
    }
    void best(const json &run, json &summary) const {
        for (const char *key : {"train_cost", "test_cost", "train_fidelity_nlog",
                                "test_fidelity_nlog"}) {
            if (run.contains(key)) {
                summary[key] = run[key];
            }
        }
    }
};

struct CompileReport {
    void observe(const BuiltProblem &p, const Circuit &incumbent,
                 std::vector<std::string> &names, std::vector<std::vector<double>> &extra) {
        if (extra.empty()) {
            names = {"n_two_qubit_gates", "diagnostic"};
            extra.resize(2);
        }
        extra[0].push_back(static_cast<double>(count_two_qubit_gates(incumbent)));
        extra[1].push_back(diagnostic_unitary_distance(incumbent, *p.target));
    }
    void summarize(const BuiltProblem &p, const VansResult &r, json &s) const {
        s["diagnostic"] = diagnostic_unitary_distance(r.best_circuit, *p.target);
    }
    void best(const json &run, json &summary) const {
        summary["diagnostic"] = run["diagnostic"];
        summary["n_two_qubit_gates"] = run["n_two_qubit_gates"];
    }
};

bool close(double stored, double recomputed) {
    return std::abs(stored - recomputed) <= 1e-9 * std::max(1.0, std::abs(stored));
}

} // namespace

int cmd_vqe(const CommonOptions &options, std::ostream &log) {
    VqeReport report;
    return run_seeds("vqe", options, ProblemFamily::Vqe, log, report);
}

int cmd_autoencode(const CommonOptions &options, std::ostream &log) {
    AutoencoderReport report;
    return run_seeds("autoencode", options, ProblemFamily::Autoencoder, log, report);
}

int cmd_compile(const CommonOptions &options, std::ostream &log) {
    CompileReport report;
    return run_seeds("compile", options, ProblemFamily::Compilation, log, report);
}

int cmd_baseline_hea(const CommonOptions &options, std::ostream &log) {
    RunConfig cfg = resolve(options, "baseline-hea");
    const BuiltProblem built = build_problem(cfg.problem);
    if (cfg.baseline_layers.empty()) {
        throw ConfigError("baseline.layers must not be empty");
    }
    for (int layers : cfg.baseline_layers) {
        if (layers < 0) {
            throw ConfigError("baseline.layers entries must be >= 0");
        }
    }
    create_run_dir(cfg.out);
    const json echo = to_json(cfg);
    write_new_file(cfg.out / "config.json", dump(echo));

    std::ostringstream csv;
    csv << "layers,seed,cost,n_cnots,n_params,relative_error\n";
    json rows = json::array();
    json best_by_layers = json::object();
    for (int layers : cfg.baseline_layers) {
        const Circuit hea = build_initial(AnsatzSpec{"hea", layers, {}}, built);
        for (std::uint64_t seed : cfg.seeds) {
            VansConfig v = vans_config_for(cfg, built, seed);
            v.max_outer_iters = 0; // fixed structure: just the Adam run
            const VansResult r = run_vans(built.problem, hea, v);
            const fs::path file = cfg.out / ("hea_L" + std::to_string(layers) + "_seed" +
                                             std::to_string(seed) + ".txt");
            write_new_file(file, to_text(r.best_circuit));
            json row = {{"layers", layers},
                        {"seed", seed},
                        {"cost", r.best_cost},
                        {"n_cnots", count_cnots(r.best_circuit)},
                        {"n_params", count_params(r.best_circuit)},
                        {"circuit", file.filename().string()}};
            csv << layers << ',' << seed << ',' << format_double(r.best_cost) << ','
                << count_cnots(r.best_circuit) << ',' << count_params(r.best_circuit) << ',';
            if (built.exact_energy) {
                row["relative_error"] = relative_error(r.best_cost, *built.exact_energy);
                csv << format_double(row["relative_error"].get<double>());
            }
            csv << '\n';
            rows.push_back(row);
            const std::string key = std::to_string(layers);
            if (!best_by_layers.contains(key) ||
                r.best_cost < best_by_layers[key]["cost"].get<double>()) {
                best_by_layers[key] = row;
            }
            log << "baseline-hea L=" << layers << " seed " << seed << ": cost "
                << format_double(r.best_cost) << "\n";
        }
    }
    write_new_file(cfg.out / "baseline.csv", csv.str());
    json summary = {{"command", "baseline-hea"},
                    {"rows", rows},
                    {"best_by_layers", best_by_layers},
                    {"config", echo}};
    if (built.exact_energy) {
        summary["exact_energy"] = *built.exact_energy;
    }
    write_new_file(cfg.out / "summary.json", dump(summary));
    if (options.emit_gnuplot) {
        std::ostringstream dat;
        dat << "# layers best_cost n_cnots n_params\n";
        for (const auto &[key, row] : best_by_layers.items()) {
            dat << row["layers"] << ' ' << format_double(row["cost"].get<double>()) << ' '
                << row["n_cnots"] << ' ' << row["n_params"] << '\n';
        }
        write_new_file(cfg.out / "baseline.dat", dat.str());
    }
    log << "wrote " << cfg.out.string() << "\n";
    if (options.verify && verify_run(cfg.out, log) != 0) {
        throw VerificationError("summary does not match the persisted circuits");
    }
    return kExitOk;
}

namespace {

/// max_i |a_i - e^{i phi} b_i| with phi aligning the largest overlap.
double phase_aligned_distance(const StateVector &a, const StateVector &b) {
    const cplx overlap = inner(b, a);
    const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

} // namespace

int cmd_simplify(const SimplifyOptions &options, std::ostream &out, std::ostream &log) {
    const Circuit input = load_circuit(options.circuit.string());
    const bool zero_input = !options.any_input;
    Circuit result(input.n_qubits());
    RewriteReport report;
    std::optional<Problem> problem;
    SimplifyConfig scfg;
    scfg.threshold = options.threshold;
    if (!options.hamiltonian.empty()) {
        if (options.any_input) {
            throw ConfigError("--any-input cannot be combined with a Hamiltonian");
        }
        PauliSum h = load_pauli_sum(options.hamiltonian.string());
        if (h.n_qubits() != input.n_qubits()) {
            throw ConfigError("Hamiltonian and circuit qubit counts differ");
        }
        problem = VqeProblem{std::move(h)};
        std::tie(result, report) = simplify(input, *problem, scfg);
    } else {
        std::tie(result, report) = simplify_structural(input, zero_input);
    }

    json rep = {{"gates_in", input.size()},
                {"gates_out", result.size()},
                {"gates_removed", report.gates_removed},
                {"rotations_fused", report.rotations_fused},
                {"passes", report.passes}};
    for (std::size_t r = 0; r < static_cast<std::size_t>(Rule::kCount); ++r) {
        rep["rules"][rule_name(static_cast<Rule>(r))] = report.rule_counts[r];
    }

    if (options.verify) {
        double err = 0.0;
        std::string what;
        if (problem) {
            const double before = evaluate_cost(input, *problem);
            const double after = evaluate_cost(result, *problem);
            err = after - before - (options.threshold * std::abs(before) + 1e-12);
            what = "cost increase beyond threshold";
            rep["verify"] = {{"cost_before", before}, {"cost_after", after}};
        } else if (zero_input) {
            const StateVector a = apply_circuit(StateVector(input.n_qubits()), input);
            const StateVector b = apply_circuit(StateVector(result.n_qubits()), result);
            err = phase_aligned_distance(a, b) - 1e-10;
            what = "output state mismatch";
            rep["verify"] = {{"state_distance", phase_aligned_distance(a, b)}};
        } else {
            if (input.n_qubits() > kMaxDenseQubits) {
                throw ConfigError("--verify with --any-input needs n <= 12");
            }
            const Eigen::MatrixXcd ua = circuit_to_unitary(input);
            const Eigen::MatrixXcd ub = circuit_to_unitary(result);
            const cplx tr = (ub.adjoint() * ua).trace();
            const cplx phase = std::abs(tr) > 0.0 ? tr / std::abs(tr) : cplx{1.0, 0.0};
            const double d = (ua - phase * ub).cwiseAbs().maxCoeff();
            err = d - 1e-10;
            what = "unitary mismatch";
            rep["verify"] = {{"unitary_distance", d}};
        }
        rep["verify"]["ok"] = err <= 0.0;
        if (err > 0.0) {
            log << "verification failed: " << what << "\n";
        }
    }

    if (options.out.empty()) {
        out << to_text(result);
        std::istringstream lines(dump(rep));
        for (std::string line; std::getline(lines, line);) {
            out << "# " << line << "\n";
        }
    } else {
        create_run_dir(options.out);
        write_new_file(options.out / "simplified.txt", to_text(result));
        write_new_file(options.out / "report.json", dump(rep));
        log << "wrote " << options.out.string() << "\n";
    }
    if (options.verify && !rep["verify"]["ok"].get<bool>()) {
        throw VerificationError("simplified circuit is not equivalent");
    }
    return kExitOk;
}

int verify_run(const fs::path &run_dir, std::ostream &log) {
    const json summary = read_json(run_dir / "summary.json");
    const RunConfig cfg = parse_config(summary.at("config"));
    const BuiltProblem built = build_problem(cfg.problem);
    int bad = 0;
    const auto check = [&](const std::string &what, double stored, double recomputed) {
        if (!close(stored, recomputed)) {
            ++bad;
            log << "mismatch in " << what << ": stored " << format_double(stored)
                << ", recomputed " << format_double(recomputed) << "\n";
        }
    };

    const std::string command = summary.at("command").get<std::string>();
    if (command == "baseline-hea") {
        for (const json &row : summary.at("rows")) {
            const Circuit c = load_circuit((run_dir / row.at("circuit").get<std::string>()).string());
            const double cost = evaluate_cost(c, built.problem);
            check("cost", row.at("cost").get<double>(), cost);
            if (row.contains("relative_error") && built.exact_energy) {
                check("relative_error", row["relative_error"].get<double>(),
                      relative_error(cost, *built.exact_energy));
            }
        }
        return bad;
    }
    for (const json &run : summary.at("runs")) {
        const fs::path dir = seed_dir(run_dir, run.at("seed").get<std::uint64_t>());
        const Circuit c = load_circuit((dir / run.at("circuit").get<std::string>()).string());
        const double cost = evaluate_cost(c, built.problem);
        const std::string tag = "seed " + std::to_string(run.at("seed").get<std::uint64_t>());
        check(tag + " best_cost", run.at("best_cost").get<double>(), cost);
        if (run.contains("relative_error") && built.exact_energy) {
            check(tag + " relative_error", run["relative_error"].get<double>(),
                  relative_error(cost, *built.exact_energy));
        }
        if (run.contains("test_cost") && built.test) {
            check(tag + " test_cost", run["test_cost"].get<double>(),
                  evaluate_cost(c, *built.test));
        }
        if (run.contains("diagnostic") && built.target) {
            check(tag + " diagnostic", run["diagnostic"].get<double>(),
                  diagnostic_unitary_distance(c, *built.target));
        }
        const json stored = read_json(dir / "summary.json");
        if (stored != run) {
            ++bad;
            log << tag << ": per-seed summary differs from the top-level copy\n";
        }
    }
    if (bad == 0) {
        log << "verified " << run_dir.string() << "\n";
    }
    return bad;
}

namespace {

void add_common(CLI::App &sub, CommonOptions &o) {
    sub.add_option("--config", o.config, "JSON run configuration");
    sub.add_option("--seed", o.seeds, "Seed list, e.g. 0,1,2 (overrides VANS_SEED)");
    sub.add_option("--out", o.out, "Run directory (must not exist)");
    sub.add_option("--max-iters", o.max_iters, "Outer iterations per seed");
    sub.add_flag("--verify", o.verify, "Re-derive the summary from the saved circuits");
    sub.add_flag("--emit-gnuplot", o.emit_gnuplot, "Also write gnuplot column files");
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Variable-structure ansatz search on an exact statevector simulator",
                 "vans"};
    app.require_subcommand(1);

    CommonOptions common;
    SimplifyOptions simp;
    std::optional<std::string> verify_dir;
    CLI::App *vqe = app.add_subcommand("vqe", "Ground-state search");
    CLI::App *ae = app.add_subcommand("autoencode", "Quantum autoencoder training");
    CLI::App *comp = app.add_subcommand("compile", "Unitary compilation");
    CLI::App *base = app.add_subcommand("baseline-hea", "Fixed layered HEA baseline");
    for (CLI::App *sub : {vqe, ae, comp, base}) {
        add_common(*sub, common);
    }
    CLI::App *sim = app.add_subcommand("simplify", "Rewrite a circuit file");
    sim->add_option("circuit", simp.circuit, "Circuit file")->required();
    sim->add_option("--hamiltonian", simp.hamiltonian, "Pauli-sum file; enables rule 6");
    sim->add_option("--threshold", simp.threshold, "Rule-6 relative threshold");
    sim->add_option("--out", simp.out, "Output directory (must not exist)");
    sim->add_flag("--verify", simp.verify, "Check equivalence with the input");
    sim->add_flag("--any-input", simp.any_input, "Do not assume the |0...0> input");
    CLI::App *ver = app.add_subcommand("verify", "Re-check a finished run directory");
    ver->add_option("run_dir", verify_dir, "Run directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        if (vqe->parsed()) {
            return cmd_vqe(common, err);
        }
        if (ae->parsed()) {
            return cmd_autoencode(common, err);
        }
        if (comp->parsed()) {
            return cmd_compile(common, err);
        }
        if (base->parsed()) {
            return cmd_baseline_hea(common, err);
        }
        if (sim->parsed()) {
            return cmd_simplify(simp, out, err);
        }
        return verify_run(*verify_dir, err) == 0 ? kExitOk : kExitVerify;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const VerificationError &e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const OptimizerDivergenceError &e) {
        err << "optimizer diverged: " << e.what() << "\n";
        return kExitDiverged;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace vans::cli
