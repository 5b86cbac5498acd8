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

#include <benchmark/benchmark.h>

#include <unordered_set>

#include "paulimeas/grouping.hpp"
#include "paulimeas/rng.hpp"

using namespace paulimeas;

namespace {

WeightedPauliSum random_op(std::size_t t, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::unordered_set<Pauli, PauliHash> seen;
    std::vector<PauliTerm> terms;
    while (terms.size() < t) {
        Pauli p(n);
        for (std::size_t q = 0; q < n; q++) {
            if (rng.below(4) == 0) {
                p.set(q, static_cast<PauliLetter>(1 + rng.below(3)));
            }
        }
        if (!p.is_identity() && seen.insert(p).second) {
            terms.push_back({rng.uniform() - 0.5, std::move(p)});
        }
    }
    return WeightedPauliSum(n, terms);
}

void BM_SortedInsertion(benchmark::State &state) {
    WeightedPauliSum op = random_op(static_cast<std::size_t>(state.range(0)), 16, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sorted_insertion(op));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SortedInsertion)->RangeMultiplier(2)->Range(64, 8192)->Complexity(benchmark::oNSquared);

void BM_AnticommutationGraph(benchmark::State &state) {
    WeightedPauliSum op = random_op(static_cast<std::size_t>(state.range(0)), 16, 2);
    std::vector<Pauli> ps = op.paulis();
    for (auto _ : state) {
        benchmark::DoNotOptimize(anticommutation_graph(ps));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AnticommutationGraph)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_GreedyColour(benchmark::State &state) {
    WeightedPauliSum op = random_op(2048, 16, 3);
    BitMatrix graph = anticommutation_graph(op.paulis());
    auto strategy = static_cast<ColouringStrategy>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_colouring(graph, strategy));
    }
    state.SetLabel(strategy_name(strategy));
}
BENCHMARK(BM_GreedyColour)->DenseRange(0, 3);

}  // namespace
