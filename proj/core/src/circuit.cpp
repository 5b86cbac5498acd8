// Copyright 2026 The paulimeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paulimeas/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <sstream>

#include "paulimeas/operator_io.hpp"

namespace paulimeas {

std::string gate_str(const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            return "H " + std::to_string(g.q0);
        case GateKind::S:
            return "S " + std::to_string(g.q0);
        case GateKind::CZ:
            return "CZ " + std::to_string(g.q0) + " " + std::to_string(g.q1);
        case GateKind::CNOT:
            return "CNOT " + std::to_string(g.q0) + " " + std::to_string(g.q1);
    }
    return "?";
}

std::size_t CliffordCircuit::two_qubit_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.two_qubit(); }));
}

void CliffordCircuit::push(const Gate &g) {
    if (g.q0 >= num_qubits_ || (g.two_qubit() && g.q1 >= num_qubits_)) {
        throw std::out_of_range("gate " + gate_str(g) + " outside a " + std::to_string(num_qubits_) + "-qubit circuit");
    }
    if (g.two_qubit() && g.q0 == g.q1) {
        throw std::invalid_argument("gate " + gate_str(g) + " uses the same qubit twice");
    }
    gates_.push_back(g.two_qubit() ? g : Gate{g.kind, g.q0, g.q0});
}

void CliffordCircuit::append(const CliffordCircuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("append: circuit is wider than the target");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void CliffordCircuit::cancel_hadamard_pairs() {
    std::vector<bool> keep(gates_.size(), true);
    // Index of the most recent surviving gate on each qubit, if it is an H.
    std::vector<std::ptrdiff_t> open_h(num_qubits_, -1);
    for (std::size_t i = 0; i < gates_.size(); i++) {
        const Gate &g = gates_[i];
        if (g.kind == GateKind::H) {
            if (open_h[g.q0] >= 0) {
                keep[static_cast<std::size_t>(open_h[g.q0])] = false;
                keep[i] = false;
                open_h[g.q0] = -1;
            } else {
                open_h[g.q0] = static_cast<std::ptrdiff_t>(i);
            }
            continue;
        }
        open_h[g.q0] = -1;
        if (g.two_qubit()) {
            open_h[g.q1] = -1;
        }
    }
    std::vector<Gate> out;
    for (std::size_t i = 0; i < gates_.size(); i++) {
        if (keep[i]) {
            out.push_back(gates_[i]);
        }
    }
    gates_ = std::move(out);
}

void conjugate_in_place(const Gate &g, BitVector &z, BitVector &x, bool &negative) {
    auto hadamard = [&](std::size_t a) {
        bool xa = x.get(a), za = z.get(a);
        negative ^= xa && za;
        x.set(a, za);
        z.set(a, xa);
    };
    auto cnot = [&](std::size_t a, std::size_t b) {
        bool xa = x.get(a), za = z.get(a), xb = x.get(b), zb = z.get(b);
        negative ^= xa && zb && (xb == za);
        x.set(b, xb ^ xa);
        z.set(a, za ^ zb);
    };
    switch (g.kind) {
        case GateKind::H:
            hadamard(g.q0);
            break;
        case GateKind::S: {
            bool xa = x.get(g.q0), za = z.get(g.q0);
            negative ^= xa && za;
            z.set(g.q0, za ^ xa);
            break;
        }
        case GateKind::CNOT:
            cnot(g.q0, g.q1);
            break;
        case GateKind::CZ:
            hadamard(g.q1);
            cnot(g.q0, g.q1);
            hadamard(g.q1);
            break;
    }
}

PhasedPauli conjugate(const CliffordCircuit &circuit, const PhasedPauli &p) {
    if (p.pauli.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("conjugate: Pauli and circuit widths differ");
    }
    BitVector z = p.pauli.z(), x = p.pauli.x();
    bool negative = false;
    for (const Gate &g : circuit.gates()) {
        conjugate_in_place(g, z, x, negative);
    }
    return {Pauli(std::move(z), std::move(x)), (p.phase + (negative ? 2 : 0)) % 4};
}

std::string to_qasm(const CliffordCircuit &circuit, const std::vector<std::string> &comments) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    for (const std::string &c : comments) {
        out << "// " << c << "\n";
    }
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits() << "];\n";
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out << "h q[" << g.q0 << "];\n";
                break;
            case GateKind::S:
                out << "s q[" << g.q0 << "];\n";
                break;
            case GateKind::CZ:
                out << "cz q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::CNOT:
                out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
        }
    }
    return out.str();
}

CliffordCircuit parse_qasm(std::string_view text) {
    static const std::regex qreg_re(R"(^qreg\s+(\w+)\s*\[\s*(\d+)\s*\]$)");
    static const std::regex one_re(R"(^(h|s)\s+(\w+)\s*\[\s*(\d+)\s*\]$)");
    static const std::regex two_re(R"(^(cz|cx)\s+(\w+)\s*\[\s*(\d+)\s*\]\s*,\s*(\w+)\s*\[\s*(\d+)\s*\]$)");
    CliffordCircuit circuit;
    std::string reg;
    bool have_reg = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::string pending;
    while (std::getline(in, raw)) {
        line_no++;
        if (auto c = raw.find("//"); c != std::string::npos) {
            raw.resize(c);
        }
        pending += raw;
        std::size_t semi;
        while ((semi = pending.find(';')) != std::string::npos) {
            std::string stmt = pending.substr(0, semi);
            pending.erase(0, semi + 1);
            std::size_t b = stmt.find_first_not_of(" \t\r\n");
            if (b == std::string::npos) {
                continue;
            }
            std::size_t e = stmt.find_last_not_of(" \t\r\n");
            stmt = stmt.substr(b, e - b + 1);
            std::smatch m;
            if (stmt.rfind("OPENQASM", 0) == 0 || stmt.rfind("include", 0) == 0 || stmt.rfind("creg", 0) == 0 ||
                stmt.rfind("measure", 0) == 0 || stmt.rfind("barrier", 0) == 0) {
                continue;
            }
            try {
                if (std::regex_match(stmt, m, qreg_re)) {
                    if (have_reg) {
                        throw ParseError(line_no, "only one qreg is supported");
                    }
                    reg = m[1];
                    circuit = CliffordCircuit(std::stoul(m[2]));
                    have_reg = true;
                } else if (std::regex_match(stmt, m, one_re)) {
                    if (!have_reg || m[2] != reg) {
                        throw ParseError(line_no, "gate on an undeclared register");
                    }
                    std::size_t q = std::stoul(m[3]);
                    circuit.push(m[1] == "h" ? Gate::h(q) : Gate::s(q));
                } else if (std::regex_match(stmt, m, two_re)) {
                    if (!have_reg || m[2] != reg || m[4] != reg) {
                        throw ParseError(line_no, "gate on an undeclared register");
                    }
                    std::size_t a = std::stoul(m[3]), b2 = std::stoul(m[5]);
                    circuit.push(m[1] == "cz" ? Gate::cz(a, b2) : Gate::cnot(a, b2));
                } else {
                    throw ParseError(line_no, "unsupported statement '" + stmt + "'");
                }
            } catch (const std::logic_error &e) {
                throw ParseError(line_no, e.what());
            }
        }
    }
    if (pending.find_first_not_of(" \t\r\n") != std::string::npos) {
        throw ParseError(line_no, "trailing statement without ';'");
    }
    if (!have_reg) {
        throw ParseError(0, "no qreg declaration");
    }
    return circuit;
}

}  // namespace paulimeas
