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
#include "vans/pauli.hpp"

#include "vans/error.hpp"
#include "vans/kernels.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace vans {

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
        throw TooLargeError("Pauli sum qubit count out of range");
    }
}

void PauliSum::add(double coefficient, const std::string &word) {
    if (word.size() != static_cast<std::size_t>(n_qubits_)) {
        throw DimensionMismatchError("Pauli word '" + word + "' has length " +
                                     std::to_string(word.size()) +
                                     ", expected " + std::to_string(n_qubits_));
    }
    if (!std::isfinite(coefficient)) {
        throw Error("non-finite Pauli coefficient");
    }
    Compiled c{0, 0, cplx{coefficient, 0.0}};
    int n_y = 0;
    for (int q = 0; q < n_qubits_; ++q) {
        const std::size_t m = qubit_mask(n_qubits_, q);
        switch (word[static_cast<std::size_t>(q)]) {
        case 'I':
            break;
        case 'X':
            c.flip |= m;
            break;
        case 'Y':
            c.flip |= m;
            c.sign_bits |= m;
            ++n_y;
            break;
        case 'Z':
            c.sign_bits |= m;
            break;
        default:
            throw Error("invalid Pauli letter in '" + word + "'");
        }
    }
    static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    c.factor *= kIPow[n_y % 4];

    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].word == word) {
            terms_[k].coefficient += coefficient;
            compiled_[k].factor = terms_[k].coefficient * kIPow[n_y % 4];
            return;
        }
    }
    terms_.push_back({word, coefficient});
    compiled_.push_back(c);
}

void PauliSum::add(double coefficient,
                   std::initializer_list<std::pair<int, char>> factors) {
    std::string word(static_cast<std::size_t>(n_qubits_), 'I');
    for (auto [q, p] : factors) {
        if (q < 0 || q >= n_qubits_) {
            throw Error("Pauli factor qubit out of range");
        }
        word[static_cast<std::size_t>(q)] = p;
    }
    add(coefficient, word);
}

void PauliSum::apply(std::span<const cplx> psi, std::span<cplx> out) const {
    const std::size_t dim = std::size_t{1} << n_qubits_;
    if (psi.size() != dim || out.size() != dim) {
        throw DimensionMismatchError("Pauli sum applied to a state of the "
                                     "wrong dimension");
    }
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
    for (const Compiled &t : compiled_) {
        const cplx plus = t.factor;
        const cplx minus = -t.factor;
        for (std::size_t b = 0; b < dim; ++b) {
            const bool odd = std::popcount(b & t.sign_bits) & 1;
            out[b ^ t.flip] += (odd ? minus : plus) * psi[b];
        }
    }
}

StateVector PauliSum::apply(const StateVector &psi) const {
    if (psi.n_qubits() != n_qubits_) {
        throw DimensionMismatchError("Hamiltonian acts on " +
                                     std::to_string(n_qubits_) +
                                     " qubits, state has " +
                                     std::to_string(psi.n_qubits()));
    }
    StateVector out(n_qubits_);
    apply(psi.amplitudes(), out.amplitudes());
    return out;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
    if (n_qubits_ > 12) {
        throw TooLargeError("dense Hamiltonian limited to 12 qubits");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Compiled &t : compiled_) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            const auto ub = static_cast<std::size_t>(b);
            const bool odd = std::popcount(ub & t.sign_bits) & 1;
            m(static_cast<Eigen::Index>(ub ^ t.flip), b) +=
                odd ? -t.factor : t.factor;
        }
    }
    return m;
}

double expectation(const StateVector &psi, const PauliSum &h) {
    const StateVector hpsi = h.apply(psi);
    const cplx e = kernels::active().dot(psi.amplitudes(), hpsi.amplitudes());
    if (std::abs(e.imag()) > 1e-10) {
        throw Error("expectation value has imaginary part " +
                    std::to_string(e.imag()));
    }
    return e.real();
}

namespace {

bool looks_complex(const std::string &tok) {
    return tok.find_first_of("ijIJ") != std::string::npos ||
           tok.find('(') != std::string::npos;
}

} // namespace

PauliSum read_pauli_sum(std::istream &in) {
    std::string line;
    int line_no = 0;
    std::optional<PauliSum> h;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream is(line);
        std::vector<std::string> tok;
        for (std::string t; is >> t;) {
            tok.push_back(t);
        }
        if (tok.empty() || tok[0][0] == '#') {
            continue;
        }
        if (!h) {
            int n = 0;
            if (tok.size() != 2 || tok[0] != "QUBITS" ||
                std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n)
                        .ptr != tok[1].data() + tok[1].size() ||
                n < 1) {
                throw ParseError("expected header 'QUBITS <n>'", line_no);
            }
            h.emplace(n);
            continue;
        }
        if (tok.size() != 2) {
            throw ParseError("expected '<coefficient> <word>'", line_no);
        }
        double c = 0.0;
        auto res = std::from_chars(tok[0].data(), tok[0].data() + tok[0].size(), c);
        if (res.ec != std::errc() || res.ptr != tok[0].data() + tok[0].size()) {
            if (looks_complex(tok[0])) {
                throw ParseError("non-real coefficient '" + tok[0] + "'",
                                 line_no);
            }
            throw ParseError("malformed coefficient '" + tok[0] + "'", line_no);
        }
        try {
            h->add(c, tok[1]);
        } catch (const Error &e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!h) {
        throw ParseError("missing 'QUBITS <n>' header", line_no);
    }
    return *h;
}

PauliSum parse_pauli_sum(const std::string &text) {
    std::istringstream is(text);
    return read_pauli_sum(is);
}

PauliSum load_pauli_sum(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open Hamiltonian file '" + path + "'");
    }
    return read_pauli_sum(in);
}

void write_pauli_sum(std::ostream &out, const PauliSum &h) {
    out << "QUBITS " << h.n_qubits() << '\n';
    char buf[64];
    for (const PauliString &t : h.terms()) {
        auto r = std::to_chars(buf, buf + sizeof(buf), t.coefficient,
                               std::chars_format::general, 17);
        out << std::string_view(buf, static_cast<std::size_t>(r.ptr - buf))
            << ' ' << t.word << '\n';
    }
}

} // namespace vans
