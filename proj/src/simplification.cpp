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
#include "vans/simplification.hpp"

#include "vans/error.hpp"
#include "vans/euler.hpp"
#include "vans/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

namespace vans {

std::string rule_name(Rule rule) {
    switch (rule) {
    case Rule::Commute:
        return "commute";
    case Rule::LeadingCnot:
        return "rule1";
    case Rule::LeadingRotZ:
        return "rule2";
    case Rule::CnotPair:
        return "rule3";
    case Rule::MergeSameAxis:
        return "rule4";
    case Rule::EulerFusion:
        return "rule5";
    case Rule::ZeroAngle:
        return "zero_angle";
    case Rule::CostAware:
        return "rule6";
    case Rule::kCount:
        break;
    }
    return "?";
}

RewriteReport &RewriteReport::operator+=(const RewriteReport &other) {
    gates_removed += other.gates_removed;
    rotations_fused += other.rotations_fused;
    passes += other.passes;
    for (std::size_t i = 0; i < rule_counts.size(); ++i) {
        rule_counts[i] += other.rule_counts[i];
    }
    return *this;
}

bool RewriteReport::empty() const {
    return gates_removed == 0 && rotations_fused == 0 && passes == 0 &&
           std::all_of(rule_counts.begin(), rule_counts.end(),
                       [](std::size_t c) { return c == 0; });
}

namespace {

constexpr double kZeroAngle = 1e-12;
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Op {
    GateKind kind;
    std::array<int, 2> q{-1, -1};
    std::vector<double> angles;

    [[nodiscard]] bool on(int qubit) const {
        const int arity = gate_arity(kind);
        return (arity >= 1 && q[0] == qubit) || (arity == 2 && q[1] == qubit);
    }
    bool operator==(const Op &) const = default;
};

using Ops = std::vector<Op>;

Ops to_ops(const Circuit &c) {
    Ops ops;
    ops.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto a = c.angles(i);
        ops.push_back({c.gate(i).kind, c.gate(i).qubits, {a.begin(), a.end()}});
    }
    return ops;
}

Circuit to_circuit(int n, const Ops &ops) {
    Circuit c(n);
    for (const Op &op : ops) {
        c.append(op.kind, op.q, op.angles);
    }
    return c;
}

std::size_t prev_on(const Ops &ops, std::size_t i, int q) {
    for (std::size_t j = i; j-- > 0;) {
        if (ops[j].on(q)) {
            return j;
        }
    }
    return npos;
}

std::size_t next_on(const Ops &ops, std::size_t i, int q) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (ops[j].on(q)) {
            return j;
        }
    }
    return npos;
}

void erase_at(Ops &ops, std::size_t i) {
    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(i));
}

bool has_kak(const Ops &ops) {
    return std::any_of(ops.begin(), ops.end(), [](const Op &o) {
        return o.kind == GateKind::TwoQubitKAK;
    });
}

bool commutes_left(const Op &rot, const Op &cnot) {
    if (cnot.kind != GateKind::CNOT) {
        return false;
    }
    return (rot.kind == GateKind::RotZ && rot.q[0] == cnot.q[0]) ||
           (rot.kind == GateKind::RotX && rot.q[0] == cnot.q[1]);
}

std::size_t canonicalize_ops(Ops &ops) {
    std::size_t moves = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (!is_rotation(ops[i].kind)) {
                continue;
            }
            const std::size_t j = prev_on(ops, i, ops[i].q[0]);
            if (j == npos || !commutes_left(ops[i], ops[j])) {
                continue;
            }
            Op moved = std::move(ops[i]);
            erase_at(ops, i);
            ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(j), std::move(moved));
            ++moves;
            changed = true;
        }
    }
    return moves;
}

std::size_t leading_cnots(Ops &ops) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < ops.size();) {
        if (ops[i].kind == GateKind::CNOT && prev_on(ops, i, ops[i].q[0]) == npos) {
            erase_at(ops, i);
            ++n;
        } else {
            ++i;
        }
    }
    return n;
}

std::size_t leading_rotz(Ops &ops) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < ops.size();) {
        if (ops[i].kind == GateKind::RotZ && prev_on(ops, i, ops[i].q[0]) == npos) {
            erase_at(ops, i);
            ++n;
        } else {
            ++i;
        }
    }
    return n;
}

std::size_t cnot_pairs(Ops &ops) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i].kind != GateKind::CNOT) {
            continue;
        }
        const std::size_t j = next_on(ops, i, ops[i].q[0]);
        if (j == npos || j != next_on(ops, i, ops[i].q[1])) {
            continue;
        }
        if (ops[j].kind == GateKind::CNOT && ops[j].q == ops[i].q) {
            erase_at(ops, j);
            erase_at(ops, i);
            ++n;
            if (i > 0) {
                --i; // re-examine the gate that slid into place
            }
            --i;
        }
    }
    return n;
}

std::size_t merge_same_axis(Ops &ops) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (!is_rotation(ops[i].kind)) {
            continue;
        }
        for (;;) {
            const std::size_t j = next_on(ops, i, ops[i].q[0]);
            if (j == npos || ops[j].kind != ops[i].kind) {
                break;
            }
            ops[i].angles[0] = normalize_angle(ops[i].angles[0] + ops[j].angles[0]);
            erase_at(ops, j);
            ++n;
        }
    }
    return n;
}

/// Returns (fusions, rotations eliminated).
std::pair<std::size_t, std::size_t> euler_fusion(Ops &ops) {
    std::size_t fusions = 0;
    std::size_t eliminated = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (!is_rotation(ops[i].kind)) {
            continue;
        }
        const int q = ops[i].q[0];
        const std::size_t p = prev_on(ops, i, q);
        if (p != npos && is_rotation(ops[p].kind)) {
            continue; // not the start of a run
        }
        std::vector<std::size_t> run{i};
        for (std::size_t j = next_on(ops, i, q);
             j != npos && is_rotation(ops[j].kind); j = next_on(ops, j, q)) {
            run.push_back(j);
        }
        bool alternating = true;
        for (std::size_t k = 1; k < run.size(); ++k) {
            alternating = alternating && ops[run[k]].kind != ops[run[k - 1]].kind;
        }
        if (run.size() < 3 || (run.size() == 3 && alternating)) {
            continue;
        }
        Mat2x2 m = {1.0, 0.0, 0.0, 1.0};
        int n_z = 0;
        int n_x = 0;
        for (std::size_t idx : run) {
            m = matmul(rotation_matrix(ops[idx].kind, ops[idx].angles[0]), m);
            (ops[idx].kind == GateKind::RotZ ? n_z : n_x) += 1;
        }
        const GateKind outer = n_x > n_z ? GateKind::RotX : GateKind::RotZ;
        const GateKind inner = outer == GateKind::RotZ ? GateKind::RotX : GateKind::RotZ;
        const EulerAngles e = euler_decompose(m, outer);

        Ops replacement;
        if (std::abs(e.middle) < kZeroAngle) {
            replacement.push_back(
                {outer, {q, -1}, {normalize_angle(e.first + e.last)}});
        } else {
            replacement.push_back({outer, {q, -1}, {e.first}});
            replacement.push_back({inner, {q, -1}, {e.middle}});
            replacement.push_back({outer, {q, -1}, {e.last}});
        }
        for (std::size_t k = run.size(); k-- > 0;) {
            erase_at(ops, run[k]);
        }
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(i),
                   replacement.begin(), replacement.end());
        ++fusions;
        eliminated += run.size() - replacement.size();
        i += replacement.size() - 1;
    }
    return {fusions, eliminated};
}

std::size_t zero_angles(Ops &ops) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < ops.size();) {
        const Op &op = ops[i];
        const bool identity =
            (is_rotation(op.kind) || op.kind == GateKind::TwoQubitKAK) &&
            std::all_of(op.angles.begin(), op.angles.end(),
                        [](double a) { return std::abs(a) < kZeroAngle; });
        if (identity) {
            erase_at(ops, i);
            ++n;
        } else {
            ++i;
        }
    }
    return n;
}

} // namespace

Circuit canonicalize(const Circuit &circuit) {
    Ops ops = to_ops(circuit);
    if (has_kak(ops)) {
        throw Error("canonicalization does not support general two-qubit gates");
    }
    canonicalize_ops(ops);
    return to_circuit(circuit.n_qubits(), ops);
}

std::pair<Circuit, RewriteReport> simplify_structural(const Circuit &circuit,
                                                      bool zero_input) {
    RewriteReport report;
    Ops ops = to_ops(circuit);
    const bool commute = !has_kak(ops);
    const std::size_t cap = 10 * std::max<std::size_t>(ops.size(), 1);

    for (;;) {
        const Ops before = ops;
        if (commute) {
            report.bump(Rule::Commute, canonicalize_ops(ops));
        }
        if (zero_input) {
            report.bump(Rule::LeadingCnot, leading_cnots(ops));
            report.bump(Rule::LeadingRotZ, leading_rotz(ops));
        }
        report.bump(Rule::CnotPair, cnot_pairs(ops));
        const std::size_t merged = merge_same_axis(ops);
        report.bump(Rule::MergeSameAxis, merged);
        report.rotations_fused += merged;
        const auto [fusions, eliminated] = euler_fusion(ops);
        report.bump(Rule::EulerFusion, fusions);
        report.rotations_fused += eliminated;
        report.bump(Rule::ZeroAngle, zero_angles(ops));
        if (ops == before) {
            break;
        }
        if (++report.passes > cap) {
            throw TerminationError("rewrite loop did not reach a fixed point "
                                   "within " + std::to_string(cap) + " passes");
        }
    }
    report.gates_removed = circuit.size() - ops.size();
    return {to_circuit(circuit.n_qubits(), ops), report};
}

namespace {

std::vector<std::size_t> rank_candidates(const Circuit &c, const Problem &problem,
                                         CandidateOrder order) {
    std::vector<std::size_t> params;
    std::vector<std::size_t> cnots;
    for (std::size_t i = 0; i < c.size(); ++i) {
        switch (c.gate(i).kind) {
        case GateKind::Phase:
            break;
        case GateKind::CNOT:
            cnots.push_back(i);
            break;
        default:
            params.push_back(i);
            break;
        }
    }
    if (order == CandidateOrder::GradientMagnitude && !params.empty()) {
        const auto grad = cost_gradient(c, problem);
        std::vector<double> score(c.size(), 0.0);
        for (std::size_t i : params) {
            const Gate &g = c.gate(i);
            for (int k = 0; k < angle_slots(g.kind); ++k) {
                score[i] = std::max(score[i], std::abs(grad[g.slot + static_cast<std::size_t>(k)]));
            }
        }
        std::stable_sort(params.begin(), params.end(),
                         [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
    }
    params.insert(params.end(), cnots.begin(), cnots.end());
    return params;
}

// Identifies a gate across re-simplifications: kind, qubits, angle bits and
// the ordinal among gates with the same kind and qubits.
using Signature = std::tuple<int, int, int, std::vector<std::uint64_t>, int>;

Signature signature(const Circuit &c, std::size_t i) {
    const Gate &g = c.gate(i);
    int ordinal = 0;
    for (std::size_t j = 0; j < i; ++j) {
        const Gate &h = c.gate(j);
        ordinal += (h.kind == g.kind && h.qubits == g.qubits) ? 1 : 0;
    }
    std::vector<std::uint64_t> bits;
    for (double a : c.angles(i)) {
        bits.push_back(std::bit_cast<std::uint64_t>(a));
    }
    return {static_cast<int>(g.kind), g.qubits[0], g.qubits[1], std::move(bits),
            ordinal};
}

} // namespace

std::pair<Circuit, RewriteReport> cost_aware_removal(const Circuit &circuit,
                                                     const Problem &problem,
                                                     const SimplifyConfig &config) {
    RewriteReport report;
    Circuit current = circuit;
    if (!config.enable_cost_aware || current.empty()) {
        return {current, report};
    }
    const bool zero_input = starts_from_zero_state(problem);
    const double entry = evaluate_cost(current, problem);
    const double slack = std::abs(entry) < 1e-6 ? config.threshold
                                                : config.threshold * std::abs(entry);
    const double allowed = entry + slack;

    std::size_t budget = std::min(config.max_candidates, current.size());
    std::set<Signature> rejected;
    while (budget > 0) {
        bool kept = false;
        for (std::size_t idx : rank_candidates(current, problem, config.order)) {
            const Signature sig = signature(current, idx);
            if (rejected.count(sig) != 0) {
                continue;
            }
            if (budget == 0) {
                break;
            }
            --budget;
            Circuit trial = current;
            trial.erase(idx);
            if (evaluate_cost(trial, problem) <= allowed) {
                report.bump(Rule::CostAware);
                auto [simplified, sub] = simplify_structural(trial, zero_input);
                report += sub;
                current = std::move(simplified);
                kept = true;
                break;
            }
            rejected.insert(sig);
        }
        if (!kept) {
            break;
        }
    }
    report.gates_removed = circuit.size() - current.size();
    return {current, report};
}

std::pair<Circuit, RewriteReport> simplify(const Circuit &circuit,
                                           const Problem &problem,
                                           const SimplifyConfig &config) {
    const bool zero_input = starts_from_zero_state(problem);
    auto [first, report] = simplify_structural(circuit, zero_input);
    auto [pruned, removal] = cost_aware_removal(first, problem, config);
    auto [last, tail] = simplify_structural(pruned, zero_input);
    const std::size_t removed = circuit.size() - last.size();
    report += removal;
    report += tail;
    report.gates_removed = removed;
    return {last, report};
}

} // namespace vans
