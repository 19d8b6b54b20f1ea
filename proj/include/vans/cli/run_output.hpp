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
 * Run directories and result files.
 *
 * A run directory is created once and never written into by a later run:
 * if the directory already exists the run aborts before doing any work.
 */
#pragma once

#include "vans/vans.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace vans::cli {

/// Creates `dir` (and parents). Throws ConfigError if it already exists.
void create_run_dir(const std::filesystem::path &dir);

/// Writes a new file; refuses to replace an existing one.
void write_new_file(const std::filesystem::path &path, const std::string &text);

/// outer_iter,cost,n_cnots,n_params,accepted,move_kind
[[nodiscard]] std::string trajectory_csv(const std::vector<TrajectoryRecord> &records);

[[nodiscard]] std::vector<TrajectoryRecord>
parse_trajectory_csv(const std::string &text);

/// Pretty-printed JSON with a trailing newline.
[[nodiscard]] std::string dump(const nlohmann::json &doc);

[[nodiscard]] nlohmann::json read_json(const std::filesystem::path &path);

/// Whitespace-separated columns for gnuplot, one row per accepted move:
/// accepted_index outer_iter cost n_cnots n_params [extra...]
[[nodiscard]] std::string
gnuplot_columns(const std::vector<TrajectoryRecord> &records,
                const std::vector<std::string> &extra_names = {},
                const std::vector<std::vector<double>> &extra = {});

} // namespace vans::cli
