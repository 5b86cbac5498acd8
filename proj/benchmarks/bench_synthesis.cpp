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

#include "paulimeas/circuit.hpp"
#include "paulimeas/gf2.hpp"
#include "paulimeas/rng.hpp"
#include "paulimeas/synthesis.hpp"

using namespace paulimeas;

namespace {

/// k independent commuting Paulis on n qubits: images of Z_0..Z_{k-1} under a random Clifford.
std::vector<Pauli> random_collection(std::size_t n, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    CliffordCircuit c(n);
    for (std::size_t g = 0; g < 6 * n * n; g++) {
        std::size_t a = rng.below(n), b = rng.below(n);
        switch (rng.below(3)) {
            case 0:
                c.h(a);
                break;
            case 1:
                c.s(a);
                break;
            default:
                if (a != b) {
                    c.cnot(a, b);
                }
        }
    }
    std::vector<Pauli> out;
    for (std::size_t i = 0; i < k; i++) {
        Pauli z(n);
        z.set(i, PauliLetter::Z);
        out.push_back(conjugate(c, PhasedPauli{z, 0}).pauli);
    }
    return out;
}

void BM_CzConstruct(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto col = random_collection(n, n / 2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cz_construct(col));
    }
}
BENCHMARK(BM_CzConstruct)->RangeMultiplier(2)->Range(8, 128);

void BM_CnotConstruct(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto col = random_collection(n, n / 2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cnot_construct(col));
    }
}
BENCHMARK(BM_CnotConstruct)->RangeMultiplier(2)->Range(8, 128);

void BM_PmhReduce(benchmark::State &state) {
    auto k = static_cast<std::size_t>(state.range(0));
    Rng rng(6);
    BitMatrix m;
    do {
        m = BitMatrix(k, k);
        for (std::size_t r = 0; r < k; r++) {
            for (std::size_t c = 0; c < k; c++) {
                m.set(r, c, rng.coin());
            }
        }
    } while (rank(m) != k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pmh_reduce(m));
    }
    state.counters["ops"] = static_cast<double>(pmh_reduce(m).add_count());
    state.counters["gauss_ops"] = static_cast<double>(gaussian_reduce(m).add_count());
}
BENCHMARK(BM_PmhReduce)->RangeMultiplier(2)->Range(16, 512);

}  // namespace

BENCHMARK_MAIN();
