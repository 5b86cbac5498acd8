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

#include <algorithm>

#include "paulimeas/gf2.hpp"
#include "paulimeas/rng.hpp"

using namespace paulimeas;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, Rng &rng) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < c; j++) {
            m.set(i, j, rng.coin());
        }
    }
    return m;
}

BitMatrix random_invertible(std::size_t k, Rng &rng) {
    while (true) {
        BitMatrix m = random_matrix(k, k, rng);
        if (rank(m) == k) {
            return m;
        }
    }
}

BitMatrix random_symmetric(std::size_t k, Rng &rng) {
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = i; j < k; j++) {
            bool b = rng.coin();
            m.set(i, j, b);
            m.set(j, i, b);
        }
    }
    return m;
}

// Six commuting four-qubit Paulis, Z half on top (columns are operators).
BitMatrix four_qubit_example() {
    return BitMatrix::from_rows({
        "101010",
        "101101",
        "110001",
        "110001",
        "011011",
        "011100",
        "011100",
        "011011",
    });
}

}  // namespace

TEST(Rref, FourQubitExamplePivots) {
    BitMatrix s = four_qubit_example();
    RrefResult r = rref(s);
    EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_EQ(r.rank(), 3u);
    EXPECT_EQ(r.transform * s, r.reduced);
    BitMatrix expected_top = BitMatrix::from_rows({"101010", "011011", "000111"});
    EXPECT_EQ(r.reduced.block(0, 0, 3, 6), expected_top);
    EXPECT_TRUE(r.reduced.block(3, 0, 5, 6).is_zero());
}

TEST(Rref, IdentityAndIdempotence) {
    RrefResult id = rref(BitMatrix::identity(5));
    EXPECT_EQ(id.reduced, BitMatrix::identity(5));
    EXPECT_EQ(id.transform, BitMatrix::identity(5));
    EXPECT_EQ(id.pivot_cols.size(), 5u);

    Rng rng(20);
    for (int t = 0; t < 10; t++) {
        BitMatrix m = random_matrix(20, 20, rng);
        RrefResult r = rref(m);
        EXPECT_EQ(r.transform * m, r.reduced);
        EXPECT_EQ(rank(r.transform), 20u);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        EXPECT_TRUE(std::is_sorted(r.pivot_cols.begin(), r.pivot_cols.end()));
    }
}

TEST(Invert, ThreeByThreeExample) {
    BitMatrix m = BitMatrix::from_rows({"010", "011", "110"});
    EXPECT_EQ(invert(m), BitMatrix::from_rows({"101", "100", "110"}));
}

TEST(Invert, RandomAndSingular) {
    Rng rng(16);
    for (int t = 0; t < 10; t++) {
        BitMatrix m = random_invertible(16, rng);
        BitMatrix inv = invert(m);
        EXPECT_EQ(m * inv, BitMatrix::identity(16));
        EXPECT_EQ(inv * m, BitMatrix::identity(16));
    }
    EXPECT_EQ(invert(BitMatrix::identity(4)), BitMatrix::identity(4));
    EXPECT_THROW(invert(BitMatrix::from_rows({"11", "11"})), SingularMatrixError);
    EXPECT_THROW(invert(BitMatrix(2, 3)), std::invalid_argument);
}

TEST(IndependentRows, GreedyTopDown) {
    BitMatrix m = BitMatrix::from_rows({"100", "110", "110", "100", "001"});
    EXPECT_EQ(independent_rows(m), (std::vector<std::size_t>{0, 1, 4}));
}

TEST(Cholesky, Reconstructs) {
    Rng rng(200);
    for (int t = 0; t < 200; t++) {
        std::size_t k = 1 + rng.below(32);
        BitMatrix e = random_symmetric(k, rng);
        CholeskyResult c = cholesky_gf2(e);
        BitMatrix lam(k, k);
        for (std::size_t i = 0; i < k; i++) {
            lam.set(i, i, c.lambda_diag.get(i));
        }
        EXPECT_EQ(lam ^ (c.m.transposed() * c.m), e);
        EXPECT_NO_THROW(invert(c.m));
    }
}

TEST(Cholesky, ZeroAndIdentity) {
    for (const BitMatrix &e : {BitMatrix(3, 3), BitMatrix::identity(3)}) {
        CholeskyResult c = cholesky_gf2(e);
        BitMatrix lam(3, 3);
        for (std::size_t i = 0; i < 3; i++) {
            lam.set(i, i, c.lambda_diag.get(i));
        }
        EXPECT_EQ(lam ^ (c.m.transposed() * c.m), e);
    }
    EXPECT_THROW(cholesky_gf2(BitMatrix::from_rows({"01", "00"})), std::invalid_argument);
}

TEST(RowOps, ReplayIsChecked) {
    RowOpList ops;
    ops.push_add(0, 1);
    ops.push_swap(0, 1);
    BitMatrix r = ops.replay(BitMatrix::identity(2));
    EXPECT_EQ(r, BitMatrix::from_rows({"11", "10"}));
    EXPECT_EQ(ops.add_count(), 1u);
    ops.push_add(0, 7);
    EXPECT_THROW(ops.replay(BitMatrix::identity(2)), std::out_of_range);
}

TEST(Pmh, SmallCases) {
    EXPECT_EQ(pmh_reduce(BitMatrix::identity(8)).size(), 0u);
    RowOpList two = pmh_reduce(BitMatrix::from_rows({"11", "01"}));
    EXPECT_EQ(two.size(), 1u);
    EXPECT_EQ(two.replay(BitMatrix::from_rows({"11", "01"})), BitMatrix::identity(2));
    EXPECT_THROW(pmh_reduce(BitMatrix(5, 5)), SingularMatrixError);
}

TEST(Pmh, RandomReplaysWithinBoundAndBeatsGaussian) {
    Rng rng(64);
    double pmh_total = 0, gauss_total = 0;
    for (int t = 0; t < 20; t++) {
        BitMatrix m = random_invertible(64, rng);
        RowOpList ops = pmh_reduce(m);
        EXPECT_EQ(ops.replay(m), BitMatrix::identity(64));
        EXPECT_LE(ops.size(), pmh_bound(64));
        RowOpList g = gaussian_reduce(m);
        EXPECT_EQ(g.replay(m), BitMatrix::identity(64));
        pmh_total += static_cast<double>(ops.size());
        gauss_total += static_cast<double>(g.size());
    }
    EXPECT_LT(pmh_total, gauss_total);
}

TEST(Pmh, BoundHoldsAcrossSizes) {
    Rng rng(5);
    for (std::size_t k = 1; k <= 40; k++) {
        BitMatrix m = random_invertible(k, rng);
        RowOpList ops = pmh_reduce(m);
        EXPECT_EQ(ops.replay(m), BitMatrix::identity(k)) << k;
        EXPECT_LE(ops.size(), pmh_bound(k)) << k;
    }
}

TEST(BlockReduce, ZeroBlockAndSingleRow) {
    EXPECT_EQ(block_reduce(BitMatrix::identity(6), 3).size(), 0u);
    BitMatrix m = BitMatrix::identity(7);
    for (std::size_t c = 1; c < 7; c++) {
        m.set(0, c, true);
    }
    RowOpList ops = block_reduce(m, 1);
    EXPECT_EQ(ops.replay(m), BitMatrix::identity(7));
    EXPECT_LE(ops.size(), 7u);
}

TEST(BlockReduce, RandomWithinBound) {
    Rng rng(48);
    for (int t = 0; t < 20; t++) {
        BitMatrix m = BitMatrix::identity(48);
        m.set_block(0, 16, random_matrix(16, 32, rng));
        RowOpList ops = block_reduce(m, 16);
        EXPECT_EQ(ops.replay(m), BitMatrix::identity(48));
        EXPECT_LE(static_cast<double>(ops.size()), block_reduce_bound(16, 48));
    }
}

TEST(BlockReduce, RejectsWrongShape) {
    BitMatrix m = BitMatrix::identity(4);
    m.set(3, 0, true);
    EXPECT_THROW(block_reduce(m, 2), std::invalid_argument);
}

TEST(BlockWidth, FlooredLog) {
    EXPECT_EQ(block_width(1), 1u);
    EXPECT_EQ(block_width(2), 1u);
    EXPECT_EQ(block_width(16), 3u);
    EXPECT_EQ(block_width(32), 3u);
    EXPECT_EQ(block_width(64), 4u);
}

TEST(Symplectic, Check) {
    EXPECT_TRUE(symplectic_check(four_qubit_example()));
    // X0 and Z0 on one qubit.
    EXPECT_FALSE(symplectic_check(BitMatrix::from_rows({"01", "10"})));
    EXPECT_TRUE(symplectic_check(BitMatrix::from_rows({"1", "1"})));
    EXPECT_THROW(symplectic_check(BitMatrix(3, 2)), std::invalid_argument);
}
