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

#include <cmath>

#include "oracles.hpp"
#include "paulimeas/metrics.hpp"
#include "paulimeas/operator_io.hpp"

using namespace paulimeas;

namespace {

WeightedPauliSum fixture(const std::string &name) {
    return read_operator_file(std::string(PAULIMEAS_FIXTURE_DIR) + "/" + name);
}

StateVector zero_one() {
    // Qubit 0 in |0>, qubit 1 in |1>.
    return StateVector::basis(2, 0b10);
}

}  // namespace

TEST(RHat, ToyArrangements) {
    WeightedPauliSum op = fixture("toy_operator.txt");
    Arrangement g1{{{0, 2}, {1, 3}}};
    Arrangement g2{{{0, 1}, {2}, {3}}};
    EXPECT_NEAR(r_hat(op, g1), 1.47, 0.005);
    EXPECT_NEAR(r_hat(op, g2), 1.71, 0.005);
    EXPECT_DOUBLE_EQ(r_hat(op, singleton_arrangement(op)), 1.0);
    EXPECT_THROW(r_hat(WeightedPauliSum(1, {}), Arrangement{}), std::invalid_argument);
}

TEST(RHat, ReportFields) {
    WeightedPauliSum op = fixture("toy_operator.txt");
    MetricReport rep = metric_report(op, Arrangement{{{0, 1}, {2}, {3}}});
    EXPECT_EQ(rep.n_collections, 3u);
    EXPECT_NEAR(rep.mean_collection_size, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(rep.per_collection_weight[0], std::sqrt(32.0), 1e-12);
    EXPECT_GE(rep.r_hat, 1.0);
}

TEST(Covariance, TwoQubitExample) {
    WeightedPauliSum op = fixture("two_qubit_heisenberg.txt");
    Arrangement merged{{{0, 1, 2}, {3, 4}}};
    auto cov = covariance_matrix(op, merged, zero_one());
    RealMatrix expected{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}};
    for (std::size_t a = 0; a < 3; a++) {
        for (std::size_t b = 0; b < 3; b++) {
            EXPECT_NEAR(cov[0][a][b], expected[a][b], 1e-9);
        }
    }
    EXPECT_NEAR(mg_eps2(collection_variances(op, merged, zero_one())), 4.0, 1e-9);
    Arrangement split{{{0}, {1, 2}, {3, 4}}};
    EXPECT_NEAR(mg_eps2(collection_variances(op, split, zero_one())), 4.0, 1e-9);
}

TEST(Covariance, EigenstateHasZeroVarianceAndDiagonalRule) {
    WeightedPauliSum op = parse_operator("1 Z0; 0.5 X1; 0.25 Z0 X1");
    StateVector s(2);
    auto cov = covariance_matrix(op, Arrangement{{{0}, {1, 2}}}, s);
    EXPECT_NEAR(cov[0][0][0], 0.0, 1e-15);
    Rng rng(2);
    StateVector r = random_state(2, rng);
    auto c2 = covariance_matrix(op, Arrangement{{{0, 1, 2}}}, r);
    for (std::size_t i = 0; i < 3; i++) {
        double e = expectation(op[i].pauli, r);
        EXPECT_NEAR(c2[0][i][i], 1 - e * e, 1e-12);
    }
    std::vector<Amplitude> bad{1.0, 1.0, 0.0, 0.0};
    EXPECT_THROW(StateVector::from_amplitudes(bad), std::invalid_argument);
}

TEST(RExact, SingletonIsOneAndEigenstateIsInfinite) {
    Rng rng(4);
    WeightedPauliSum op = paulimeas::testing::random_operator(3, 10, rng);
    StateVector s = random_state(3, rng);
    RValue r = r_exact(op, singleton_arrangement(op), s);
    EXPECT_FALSE(r.infinite);
    EXPECT_NEAR(r.value, 1.0, 1e-12);

    WeightedPauliSum z = parse_operator("1 Z0; 2 Z1");
    RValue inf = r_exact(z, Arrangement{{{0, 1}}}, StateVector(2));
    EXPECT_TRUE(inf.infinite);
    EXPECT_TRUE(std::isinf(inf.value));
}

TEST(ShotPlan, WorkedAllocations) {
    ShotPlan p = shot_plan({4.0, 0.0}, 0.1);
    EXPECT_NEAR(p.m_g, 400.0, 1e-9);
    EXPECT_EQ(p.total_shots, 400u);
    EXPECT_EQ(p.per_collection_shots, (std::vector<std::size_t>{399, 1}));

    ShotPlan one = shot_plan({2.5}, 0.05);
    EXPECT_EQ(one.per_collection_shots.size(), 1u);
    EXPECT_EQ(one.per_collection_shots[0], one.total_shots);

    ShotPlan eq = shot_plan({1.0, 1.0, 1.0, 1.0}, 0.1);
    EXPECT_NEAR(eq.m_g, 16.0 / 0.01, 1e-9);
    EXPECT_EQ(eq.per_collection_shots, (std::vector<std::size_t>{400, 400, 400, 400}));
    EXPECT_THROW(shot_plan({-1.0}, 0.1), std::invalid_argument);
    EXPECT_THROW(shot_plan({1.0}, 0.0), std::invalid_argument);
}

TEST(ShotPlan, SumsToTotal) {
    Rng rng(31);
    for (int t = 0; t < 100; t++) {
        std::vector<double> v(1 + rng.below(8));
        for (double &x : v) {
            x = rng.coin() ? rng.uniform() * 3 : 0.0;
        }
        ShotPlan p = shot_plan(v, 0.01 + rng.uniform());
        std::size_t sum = 0;
        for (std::size_t i = 0; i < v.size(); i++) {
            sum += p.per_collection_shots[i];
            EXPECT_GE(p.per_collection_shots[i], 1u);
        }
        EXPECT_EQ(sum, p.total_shots);
        EXPECT_GE(static_cast<double>(p.total_shots), std::ceil(p.m_g - 1e-9));
    }
}

TEST(MergeMonotonicity, MergingNeverLowersR) {
    Rng rng(1001);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng.below(4);
        WeightedPauliSum op = paulimeas::testing::random_operator(n, 2 + rng.below(8), rng);
        Arrangement arr = singleton_arrangement(op);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < op.size(); i++) {
            for (std::size_t j = i + 1; j < op.size(); j++) {
                if (commutes(op[i].pauli, op[j].pauli)) {
                    pairs.emplace_back(i, j);
                }
            }
        }
        if (pairs.empty()) {
            continue;
        }
        auto [i, j] = pairs[rng.below(pairs.size())];
        Arrangement merged = merge_collections(op, arr, i, j);
        EXPECT_GE(r_hat(op, merged), r_hat(op, arr) - 1e-12);
        StateVector s = random_state(n, rng);
        RValue before = r_exact(op, arr, s), after = r_exact(op, merged, s);
        if (!before.infinite) {
            EXPECT_TRUE(after.infinite || after.value >= before.value - 1e-9);
        }
    }
}

TEST(Metrics, UniformAverageOfRTracksRHat) {
    Rng rng(77);
    for (int t = 0; t < 3; t++) {
        WeightedPauliSum op = paulimeas::testing::random_operator(4, 5 + rng.below(16), rng);
        Arrangement arr = sorted_insertion(op);
        double sum = 0;
        const int states = 500;
        for (int s = 0; s < states; s++) {
            sum += r_exact(op, arr, random_state(4, rng)).value;
        }
        double mean = sum / states;
        EXPECT_LT(std::abs(mean - r_hat(op, arr)) / r_hat(op, arr), 0.15);
    }
}
