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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "paulimeas/pauli.hpp"

namespace paulimeas {

enum class GateKind { H, S, CZ, CNOT };

/// S is diag(1, i), so S X S^dag = Y. For CNOT, q0 is the control.
struct Gate {
    GateKind kind = GateKind::H;
    std::size_t q0 = 0;
    std::size_t q1 = 0;

    static Gate h(std::size_t q) {
        return {GateKind::H, q, q};
    }
    static Gate s(std::size_t q) {
        return {GateKind::S, q, q};
    }
    static Gate cz(std::size_t a, std::size_t b) {
        return {GateKind::CZ, a, b};
    }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, control, target};
    }
    bool two_qubit() const noexcept {
        return kind == GateKind::CZ || kind == GateKind::CNOT;
    }
    bool touches(std::size_t q) const noexcept {
        return q0 == q || (two_qubit() && q1 == q);
    }
    bool operator==(const Gate &) const = default;
};

std::string gate_str(const Gate &g);

class CliffordCircuit {
   public:
    CliffordCircuit() = default;
    explicit CliffordCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    }

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    std::size_t size() const noexcept {
        return gates_.size();
    }
    bool empty() const noexcept {
        return gates_.empty();
    }
    std::size_t two_qubit_count() const noexcept;

    /// Throws std::out_of_range / std::invalid_argument on bad qubit indices.
    void push(const Gate &g);
    void h(std::size_t q) {
        push(Gate::h(q));
    }
    void s(std::size_t q) {
        push(Gate::s(q));
    }
    void cz(std::size_t a, std::size_t b) {
        push(Gate::cz(a, b));
    }
    void cnot(std::size_t control, std::size_t target) {
        push(Gate::cnot(control, target));
    }
    void append(const CliffordCircuit &other);

    /// Removes H pairs on a qubit with nothing else acting on that qubit in between.
    void cancel_hadamard_pairs();

    bool operator==(const CliffordCircuit &) const = default;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
};

/// Applies one gate to a Hermitian Pauli with sign bit, in place: P -> G P G^dag.
void conjugate_in_place(const Gate &g, BitVector &z, BitVector &x, bool &negative);

/// U P U^dag where U is the circuit (first gate applied first).
PhasedPauli conjugate(const CliffordCircuit &circuit, const PhasedPauli &p);

/// OpenQASM 2.0 using h, s, cz, cx; each comment line is emitted as "// <line>".
std::string to_qasm(const CliffordCircuit &circuit, const std::vector<std::string> &comments = {});
/// Reads the subset written by to_qasm (one qreg, gates h, s, cz, cx, optional measure/creg).
CliffordCircuit parse_qasm(std::string_view text);

}  // namespace paulimeas
