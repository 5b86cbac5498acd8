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
#include "paulimeas/operator_io.hpp"

using namespace paulimeas;

TEST(ParseOperator, SemicolonLinesAndHeader) {
    WeightedPauliSum op = parse_operator("2 qubits; -1 X0 X1; 1 Z0 Z1; 0.5 I");
    EXPECT_EQ(op.num_qubits(), 2u);
    ASSERT_EQ(op.size(), 2u);
    EXPECT_EQ(op[0].coeff, -1.0);
    EXPECT_EQ(op[0].pauli, Pauli::from_dense("XX"));
    EXPECT_EQ(op[1].pauli, Pauli::from_dense("ZZ"));
    EXPECT_EQ(op.identity_offset(), 0.5);
}

TEST(ParseOperator, ToyOperatorShiftedToZeroIndex) {
    // The four-term example written with qubits counted from 1, shifted down by one.
    WeightedPauliSum op = parse_operator("4 X0; 4 X1; 1 Z1; 1 Z0 X1");
    EXPECT_EQ(op.num_qubits(), 2u);
    ASSERT_EQ(op.size(), 4u);
    EXPECT_EQ(op[3].pauli, Pauli::from_dense("ZX"));
    EXPECT_TRUE(commutes(op[0].pauli, op[1].pauli));
}

TEST(ParseOperator, DuplicatesMergeAndZerosDrop) {
    WeightedPauliSum op = parse_operator("1 Z0\n2 Z0\n0 X0\n");
    ASSERT_EQ(op.size(), 1u);
    EXPECT_EQ(op[0].coeff, 3.0);
}

TEST(ParseOperator, CommentsAndDeclaredWidth) {
    WeightedPauliSum op = parse_operator("# header\nqubits: 5\n  1.5   Y3   # trailing\n\n");
    EXPECT_EQ(op.num_qubits(), 5u);
    EXPECT_EQ(op[0].pauli.letter(3), PauliLetter::Y);
}

TEST(ParseOperator, ErrorsCarryLineNumbers) {
    try {
        parse_operator("qubits: 2\n1 Z0\n1 Q1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_operator("qubits: 2\n1 Z2\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_operator("nan Z0"), ParseError);
    EXPECT_THROW(parse_operator("inf Z0"), ParseError);
    EXPECT_THROW(parse_operator("1 Z"), ParseError);
    EXPECT_THROW(parse_operator("1 Z0 X0"), ParseError);
}

TEST(ParseOperator, JsonFormat) {
    WeightedPauliSum op = parse_operator(
        R"({"n_qubits": 6, "terms": [{"coeff": 0.25, "pauli": "X0 Y3 Z5"}, {"coeff": -2, "pauli": ""}]})");
    EXPECT_EQ(op.num_qubits(), 6u);
    ASSERT_EQ(op.size(), 1u);
    EXPECT_EQ(op[0].pauli.sparse_str(), "X0 Y3 Z5");
    EXPECT_EQ(op.identity_offset(), -2.0);
    EXPECT_THROW(parse_operator(R"({"terms": [{"coeff": "x", "pauli": "Z0"}]})"), ParseError);
    EXPECT_THROW(parse_operator(R"({"n_qubits": 1, "terms": [{"coeff": 1, "pauli": "Z1"}]})"), ParseError);
}

TEST(FormatOperator, RoundTripsExactly) {
    Rng rng(17);
    for (int t = 0; t < 20; t++) {
        WeightedPauliSum op = paulimeas::testing::random_operator(5, 30, rng);
        op = WeightedPauliSum(op.num_qubits(), op.terms(), rng.uniform() - 0.5);
        EXPECT_EQ(parse_operator(format_operator(op)), op);
        EXPECT_EQ(parse_operator(format_operator_json(op)), op);
    }
}
