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
#include "vans/cli/run_output.hpp"

#include "vans/circuit.hpp"
#include "vans/error.hpp"

#include <fstream>
#include <sstream>

namespace vans::cli {

namespace fs = std::filesystem;

void create_run_dir(const fs::path &dir) {
    if (fs::exists(dir)) {
        throw ConfigError("run directory '" + dir.string() +
                          "' already exists; refusing to overwrite");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create run directory '" + dir.string() +
                          "': " + ec.message());
    }
}

void write_new_file(const fs::path &path, const std::string &text) {
    if (fs::exists(path)) {
        throw Error("refusing to overwrite '" + path.string() + "'");
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
}

std::string trajectory_csv(const std::vector<TrajectoryRecord> &records) {
    std::ostringstream s;
    s << "outer_iter,cost,n_cnots,n_params,accepted,move_kind\n";
    for (const TrajectoryRecord &r : records) {
        s << r.outer_iter << ',' << format_double(r.cost) << ',' << r.n_cnots << ','
          << r.n_params << ',' << (r.accepted ? 1 : 0) << ',' << to_string(r.move_kind)
          << '\n';
    }
    return s.str();
}

std::vector<TrajectoryRecord> parse_trajectory_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (line != "outer_iter,cost,n_cnots,n_params,accepted,move_kind") {
        throw ParseError("unexpected trajectory header '" + line + "'", 1);
    }
    std::vector<TrajectoryRecord> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::vector<std::string> cells;
        std::string cell;
        while (std::getline(row, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 6) {
            throw ParseError("expected 6 columns", line_no);
        }
        TrajectoryRecord r;
        try {
            r.outer_iter = std::stoull(cells[0]);
            r.cost = std::stod(cells[1]);
            r.n_cnots = std::stoull(cells[2]);
            r.n_params = std::stoull(cells[3]);
        } catch (const std::exception &) {
            throw ParseError("malformed number", line_no);
        }
        r.accepted = cells[4] == "1";
        if (cells[5] != "insert" && cells[5] != "simplify-only") {
            throw ParseError("unknown move kind '" + cells[5] + "'", line_no);
        }
        r.move_kind = cells[5] == "insert" ? MoveKind::Insert : MoveKind::SimplifyOnly;
        out.push_back(r);
    }
    return out;
}

std::string dump(const nlohmann::json &doc) { return doc.dump(2) + "\n"; }

nlohmann::json read_json(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

std::string gnuplot_columns(const std::vector<TrajectoryRecord> &records,
                            const std::vector<std::string> &extra_names,
                            const std::vector<std::vector<double>> &extra) {
    std::ostringstream s;
    s << "# accepted_index outer_iter cost n_cnots n_params";
    for (const std::string &name : extra_names) {
        s << ' ' << name;
    }
    s << '\n';
    std::size_t k = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const TrajectoryRecord &r = records[i];
        if (!r.accepted) {
            continue;
        }
        s << ++k << ' ' << r.outer_iter << ' ' << format_double(r.cost) << ' '
          << r.n_cnots << ' ' << r.n_params;
        for (const auto &column : extra) {
            s << ' ' << format_double(i < column.size() ? column[i] : 0.0);
        }
        s << '\n';
    }
    return s.str();
}

} // namespace vans::cli
