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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "paulimeas/circuit.hpp"
#include "paulimeas/operator_io.hpp"

using namespace paulimeas;
using namespace paulimeas::testing;

TEST(Circuit, RejectsBadGates) {
    CliffordCircuit c(2);
    EXPECT_THROW(c.h(2), std::out_of_range);
    EXPECT_THROW(c.cz(1, 1), std::invalid_argument);
    c.cnot(0, 1);
    c.cz(1, 0);
    c.s(0);
    EXPECT_EQ(c.two_qubit_count(), 2u);
}

TEST(Conjugate, SingleGateRules) {
    auto img = [](const Gate &g, const char *p, std::size_t n) {
        CliffordCircuit c(n);
        c.push(g);
        return conjugate(c, PhasedPauli{Pauli::from_dense(p), 0});
    };
    EXPECT_EQ(img(Gate::s(0), "X", 1), (PhasedPauli{Pauli::from_dense("Y"), 0}));
    EXPECT_EQ(img(Gate::s(0), "Y", 1), (PhasedPauli{Pauli::from_dense("X"), 2}));
    EXPECT_EQ(img(Gate::h(0), "Y", 1), (PhasedPauli{Pauli::from_dense("Y"), 2}));
    EXPECT_EQ(img(Gate::cnot(0, 1), "XI", 2), (PhasedPauli{Pauli::from_dense("XX"), 0}));
    EXPECT_EQ(img(Gate::cnot(0, 1), "IZ", 2), (PhasedPauli{Pauli::from_dense("ZZ"), 0}));
    EXPECT_EQ(img(Gate::cz(0, 1), "XI", 2), (PhasedPauli{Pauli::from_dense("XZ"), 0}));
}

TEST(Conjugate, MatchesDenseConjugation) {
    Rng rng(55);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng.below(5);
        CliffordCircuit c = random_circuit(n, rng.below(15), rng);
        PhasedPauli p{random_pauli(n, rng), 0};
        PhasedPauli q = conjugate(c, p);
        Dense u = dense_unitary(c);
        EXPECT_LT(max_abs_diff(u * dense_phased(p) * u.adjoint(), dense_phased(q)), 1e-10);
    }
}

TEST(Oracles, RowBuiltUnitaryAndResidualAgreeWithProducts) {
    Rng rng(56);
    for (int t = 0; t < 30; t++) {
        std::size_t n = 1 + rng.below(4);
        CliffordCircuit c = random_circuit(n, rng.below(20), rng);
        Dense u = dense_unitary(c);
        EXPECT_LT(max_abs_diff(u, paulimeas::testing::dense_unitary_rows(c)), 1e-12);
        // A true image gives zero residual; the same image with the wrong sign does not.
        Pauli z(n);
        z.set(rng.below(n), PauliLetter::Z);
        CliffordCircuit inv(n);
        for (auto g = c.gates().rbegin(); g != c.gates().rend(); ++g) {
            for (int rep = 0; rep < (g->kind == GateKind::S ? 3 : 1); rep++) {
                inv.push(*g);
            }
        }
        PhasedPauli pre = conjugate(inv, PhasedPauli{z, 0});
        if (pre.phase % 2 != 0) {
            continue;
        }
        int s = pre.phase == 0 ? 1 : -1;
        EXPECT_LT(paulimeas::testing::conjugation_residual(u, pre.pauli, s, z.z()), 1e-12);
        EXPECT_GT(paulimeas::testing::conjugation_residual(u, pre.pauli, -s, z.z()), 1e-3);
    }
}

TEST(CancelHadamards, OnlyAdjacentOnSameQubit) {
    CliffordCircuit c(3);
    c.h(0);
    c.h(1);
    c.s(2);
    c.h(0);
    c.cz(1, 2);
    c.h(1);
    c.cancel_hadamard_pairs();
    CliffordCircuit expected(3);
    expected.h(1);
    expected.s(2);
    expected.cz(1, 2);
    expected.h(1);
    EXPECT_EQ(c, expected);
}

TEST(Qasm, RoundTrip) {
    Rng rng(9);
    CliffordCircuit c = random_circuit(4, 30, rng);
    std::string text = to_qasm(c, {"construction: cz", "k: 2"});
    EXPECT_NE(text.find("// construction: cz"), std::string::npos);
    EXPECT_EQ(parse_qasm(text), c);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nt q[0];\n"), ParseError);
    EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[2];\n"), ParseError);
}
