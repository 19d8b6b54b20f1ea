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

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace vans {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value,
                             std::chars_format::general, 17);
    return {buf, res.ptr};
}

void write_circuit(std::ostream &out, const Circuit &circuit) {
    out << "QUBITS " << circuit.n_qubits() << '\n';
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Gate &g = circuit.gate(i);
        out << to_string(g.kind);
        for (int k = 0; k < gate_arity(g.kind); ++k) {
            out << ' ' << g.qubits[k];
        }
        for (double a : circuit.angles(i)) {
            out << ' ' << format_double(a);
        }
        out << '\n';
    }
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream os;
    write_circuit(os, circuit);
    return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string &line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string t;
    while (is >> t) {
        tokens.push_back(t);
    }
    return tokens;
}

template <typename T> T parse_number(const std::string &tok, int line_no) {
    T value{};
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        throw ParseError("cannot parse number '" + tok + "'", line_no);
    }
    return value;
}

} // namespace

Circuit read_circuit(std::istream &in) {
    std::string line;
    int line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '#') {
            continue;
        }
        if (!circuit) {
            if (tokens[0] != "QUBITS" || tokens.size() != 2) {
                throw ParseError("expected header 'QUBITS <n>'", line_no);
            }
            const int n = parse_number<int>(tokens[1], line_no);
            if (n < 1) {
                throw ParseError("qubit count must be positive", line_no);
            }
            circuit.emplace(n);
            continue;
        }
        GateKind kind;
        const std::string &op = tokens[0];
        if (op == "RZ") {
            kind = GateKind::RotZ;
        } else if (op == "RX") {
            kind = GateKind::RotX;
        } else if (op == "CNOT") {
            kind = GateKind::CNOT;
        } else if (op == "KAK") {
            kind = GateKind::TwoQubitKAK;
        } else if (op == "PHASE") {
            kind = GateKind::Phase;
        } else {
            throw ParseError("unknown gate '" + op + "'", line_no);
        }
        const int arity = gate_arity(kind);
        const int slots = angle_slots(kind);
        if (tokens.size() != static_cast<std::size_t>(1 + arity + slots)) {
            throw ParseError(op + " expects " + std::to_string(arity) +
                                 " qubit(s) and " + std::to_string(slots) +
                                 " angle(s)",
                             line_no);
        }
        std::array<int, 2> qubits{-1, -1};
        for (int k = 0; k < arity; ++k) {
            qubits[k] = parse_number<int>(tokens[1 + k], line_no);
        }
        std::vector<double> angles;
        for (int k = 0; k < slots; ++k) {
            angles.push_back(parse_number<double>(tokens[1 + arity + k], line_no));
        }
        try {
            circuit->append(kind, qubits, angles);
        } catch (const Error &e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!circuit) {
        throw ParseError("missing 'QUBITS <n>' header", line_no);
    }
    return *circuit;
}

Circuit parse_circuit(const std::string &text) {
    std::istringstream is(text);
    return read_circuit(is);
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open circuit file '" + path + "'");
    }
    return read_circuit(in);
}

void save_circuit(const std::string &path, const Circuit &circuit) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write circuit file '" + path + "'");
    }
    write_circuit(out, circuit);
}

} // namespace vans
