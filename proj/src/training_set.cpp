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
#include "vans/circuit.hpp"
#include "vans/error.hpp"
#include "vans/problems.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace vans {

void write_states(std::ostream &out, const std::vector<StateVector> &states) {
    const int n = states.empty() ? 1 : states.front().n_qubits();
    out << "STATES " << states.size() << " QUBITS " << n << '\n';
    for (const StateVector &s : states) {
        if (s.n_qubits() != n) {
            throw DimensionMismatchError("states differ in qubit count");
        }
        for (std::size_t i = 0; i < s.dim(); ++i) {
            out << (i ? " " : "") << format_double(s[i].real()) << ' '
                << format_double(s[i].imag());
        }
        out << '\n';
    }
}

std::vector<StateVector> read_states(std::istream &in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first != std::string::npos && line[first] != '#') {
                return true;
            }
        }
        return false;
    };
    if (!next_line()) {
        throw ParseError("missing 'STATES <N> QUBITS <n>' header", line_no);
    }
    std::istringstream hs(line);
    std::string k1, k2;
    std::size_t count = 0;
    int n = 0;
    if (!(hs >> k1 >> count >> k2 >> n) || k1 != "STATES" || k2 != "QUBITS" ||
        n < 1 || n > kMaxStateQubits) {
        throw ParseError("expected 'STATES <N> QUBITS <n>'", line_no);
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<StateVector> states;
    for (std::size_t s = 0; s < count; ++s) {
        if (!next_line()) {
            throw ParseError("expected " + std::to_string(count) + " states",
                             line_no);
        }
        std::istringstream ls(line);
        std::vector<double> values;
        for (std::string tok; ls >> tok;) {
            double v = 0.0;
            auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (r.ec != std::errc() || r.ptr != tok.data() + tok.size()) {
                throw ParseError("bad amplitude '" + tok + "'", line_no);
            }
            values.push_back(v);
        }
        if (values.size() != 2 * dim) {
            throw ParseError("state needs " + std::to_string(2 * dim) +
                                 " numbers",
                             line_no);
        }
        std::vector<cplx> amps(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            amps[i] = {values[2 * i], values[2 * i + 1]};
        }
        states.push_back(StateVector::from_amplitudes(std::move(amps)));
    }
    return states;
}

void save_states(const std::string &path, const std::vector<StateVector> &states) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    write_states(out, states);
}

std::vector<StateVector> load_states(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return read_states(in);
}

} // namespace vans
