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
#include <cstdint>
#include <string>
#include <vector>

#include "paulimeas/pauli.hpp"

namespace paulimeas::cli {

struct BenchOptions {
    std::size_t max_terms = 50000;
    std::size_t qubits = 16;
    std::uint64_t seed = 1;
    /// The dense anticommutation graph is t^2 bits, so it is only timed up to here.
    std::size_t graph_max_terms = 4096;
    /// Each point is repeated until at least this much wall time has accumulated.
    double min_seconds = 0.05;
    /// The reported time is the best batch.
    std::size_t batches = 3;
    /// Independent operators per point, cycled between calls: about variant_terms / t of them,
    /// clamped to [2, 64]. Re-running one small input lets the branch predictor learn it, which
    /// makes small t look faster than it is.
    std::size_t variant_terms = 16384;
};

struct BenchPoint {
    std::size_t terms = 0;
    std::size_t collections = 0;
    double sorted_insertion_seconds = 0.0;
    /// Negative when the point is above graph_max_terms.
    double graph_seconds = -1.0;
    /// Colouring time per strategy on the prebuilt graph, in strategy order.
    std::vector<double> colouring_seconds;
};

WeightedPauliSum synthetic_operator(std::size_t terms, std::size_t qubits, std::uint64_t seed);

/// t = 1, 2, 4, ... up to max_terms, always ending at max_terms.
std::vector<std::size_t> bench_sweep(std::size_t max_terms);

std::size_t variant_count(const BenchOptions &options, std::size_t t);

std::vector<BenchPoint> run_bench(const BenchOptions &options);

std::string bench_to_json(const BenchOptions &options, const std::vector<BenchPoint> &points);

}  // namespace paulimeas::cli
