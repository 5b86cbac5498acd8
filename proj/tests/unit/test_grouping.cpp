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
#include "paulimeas/grouping.hpp"
#include "paulimeas/operator_io.hpp"

using namespace paulimeas;

#ifndef PAULIMEAS_FIXTURE_DIR
#error "PAULIMEAS_FIXTURE_DIR must be defined"
#endif

namespace {

WeightedPauliSum fixture(const std::string &name) {
    return read_operator_file(std::string(PAULIMEAS_FIXTURE_DIR) + "/" + name);
}

const ColouringStrategy kStrategies[] = {ColouringStrategy::LargestFirst, ColouringStrategy::ConnectedSequentialDfs,
                                         ColouringStrategy::Dsatur, ColouringStrategy::IndependentSet};

}  // namespace

TEST(SortedInsertion, ToyOperator) {
    WeightedPauliSum op = fixture("toy_operator.txt");
    Arrangement arr = sorted_insertion(op);
    Arrangement expected{{{0, 1}, {2}, {3}}};
    EXPECT_EQ(arr, expected);
}

TEST(SortedInsertion, TrivialCases) {
    WeightedPauliSum one = parse_operator("1 X0 Y1");
    EXPECT_EQ(sorted_insertion(one).size(), 1u);
    EXPECT_EQ(sorted_insertion(fixture("all_z.txt")).size(), 1u);
}

TEST(SortedInsertion, TiesKeepInputOrder) {
    WeightedPauliSum op = parse_operator("1 X0; 1 Z0; 1 Y0; 2 Z1");
    Arrangement arr = sorted_insertion(op);
    Arrangement expected{{{3, 0}, {1}, {2}}};
    EXPECT_EQ(arr, expected);
    EXPECT_EQ(sorted_insertion(op), arr);
}

TEST(GreedyColour, TrivialGraphs) {
    WeightedPauliSum commuting = fixture("all_z.txt");
    WeightedPauliSum triangle = parse_operator("1 X0; 1 Y0; 1 Z0");
    for (ColouringStrategy s : kStrategies) {
        EXPECT_EQ(greedy_colour(commuting, s).size(), 1u) << strategy_name(s);
        EXPECT_EQ(greedy_colour(triangle, s).size(), 3u) << strategy_name(s);
    }
    EXPECT_THROW(parse_colouring_strategy("random_sequential"), std::invalid_argument);
    EXPECT_EQ(parse_colouring_strategy("connected-sequential"), ColouringStrategy::ConnectedSequentialDfs);
}

TEST(GreedyColour, H2FixtureNeedsTwoCollections) {
    WeightedPauliSum op = fixture("h2_sto3g_scbk.txt");
    ASSERT_EQ(op.size(), 4u);
    EXPECT_EQ(sorted_insertion(op).size(), 2u);
    for (ColouringStrategy s : kStrategies) {
        EXPECT_EQ(greedy_colour(op, s).size(), 2u) << strategy_name(s);
    }
}

TEST(GreedyColour, KnownOrders) {
    // Path 0-1-2-3 plus isolated 4.
    BitMatrix adj(5, 5);
    auto edge = [&](std::size_t a, std::size_t b) {
        adj.set(a, b, true);
        adj.set(b, a, true);
    };
    edge(0, 1);
    edge(1, 2);
    edge(2, 3);
    EXPECT_EQ(greedy_colouring(adj, ColouringStrategy::LargestFirst), (std::vector<std::size_t>{1, 0, 1, 0, 0}));
    EXPECT_EQ(greedy_colouring(adj, ColouringStrategy::ConnectedSequentialDfs),
              (std::vector<std::size_t>{0, 1, 0, 1, 0}));
    EXPECT_EQ(greedy_colouring(adj, ColouringStrategy::Dsatur), (std::vector<std::size_t>{1, 0, 1, 0, 0}));
    EXPECT_EQ(greedy_colouring(adj, ColouringStrategy::IndependentSet), (std::vector<std::size_t>{0, 1, 0, 1, 0}));
}

TEST(Arrangements, RandomOperatorsAlwaysValid) {
    Rng rng(300);
    for (int t = 0; t < 40; t++) {
        std::size_t n = 1 + rng.below(10);
        std::size_t max_terms = std::min<std::size_t>(300, (std::size_t{1} << (2 * n)) - 1);
        std::size_t terms = 1 + rng.below(max_terms);
        WeightedPauliSum op = paulimeas::testing::random_operator(n, terms, rng);
        EXPECT_NO_THROW(validate_arrangement(op, sorted_insertion(op)));
        for (ColouringStrategy s : kStrategies) {
            EXPECT_NO_THROW(validate_arrangement(op, greedy_colour(op, s))) << strategy_name(s);
        }
    }
}

TEST(Arrangements, ValidationCatchesProblems) {
    WeightedPauliSum op = parse_operator("1 X0; 1 Z0; 1 Z1");
    EXPECT_THROW(validate_arrangement(op, Arrangement{{{0, 1}, {2}}}), NonCommutingError);
    EXPECT_THROW(validate_arrangement(op, Arrangement{{{0}, {2}}}), std::invalid_argument);
    EXPECT_THROW(validate_arrangement(op, Arrangement{{{0}, {0, 2}, {1}}}), std::invalid_argument);
    EXPECT_THROW(validate_arrangement(op, Arrangement{{{0}, {1}, {3}}}), std::invalid_argument);
}

TEST(Merge, LegalAndIllegal) {
    WeightedPauliSum op = parse_operator("1 X0; 1 Z0; 1 Z1; 1 X2");
    Arrangement arr{{{0}, {1}, {2}, {3}}};
    Arrangement merged = merge_collections(op, arr, 3, 2);
    EXPECT_EQ(merged, (Arrangement{{{0}, {1}, {2, 3}}}));
    try {
        merge_collections(op, arr, 0, 1);
        FAIL();
    } catch (const NonCommutingError &e) {
        EXPECT_EQ(e.first, 0u);
        EXPECT_EQ(e.second, 1u);
    }
}
