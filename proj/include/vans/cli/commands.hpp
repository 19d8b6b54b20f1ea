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
 * Subcommands of the `vans` executable.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace vans::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfig = 2,
    kExitVerify = 3,
    kExitDiverged = 4,
};

struct CommonOptions {
    std::filesystem::path config;
    /// "--seed 1,2,3"; falls back to $VANS_SEED, then to the config.
    std::optional<std::string> seeds;
    std::filesystem::path out;
    std::optional<std::size_t> max_iters;
    bool verify = false;
    bool emit_gnuplot = false;
};

struct SimplifyOptions {
    std::filesystem::path circuit;
    /// Enables rule 6 against this Hamiltonian.
    std::filesystem::path hamiltonian;
    std::filesystem::path out;
    bool verify = false;
    /// Do not assume the |0...0> input (disables rules 1 and 2).
    bool any_input = false;
    double threshold = 1e-4;
};

// Each command throws vans::Error subclasses; run_cli maps them to exit codes.
int cmd_vqe(const CommonOptions &options, std::ostream &log);
int cmd_autoencode(const CommonOptions &options, std::ostream &log);
int cmd_compile(const CommonOptions &options, std::ostream &log);
int cmd_baseline_hea(const CommonOptions &options, std::ostream &log);
int cmd_simplify(const SimplifyOptions &options, std::ostream &out, std::ostream &log);

/// Recomputes every cost-derived summary field of a finished run from the
/// persisted circuit files. Returns the number of mismatching fields.
[[nodiscard]] int verify_run(const std::filesystem::path &run_dir, std::ostream &log);

/// Full command line; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace vans::cli
