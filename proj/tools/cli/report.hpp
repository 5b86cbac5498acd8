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
#include <optional>
#include <string>
#include <vector>

namespace paulimeas::cli {

struct RExactStats {
    std::size_t states = 0;
    std::uint64_t seed = 0;
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    /// States on which every collection had zero variance.
    std::size_t infinite = 0;
};

struct CollectionGates {
    std::size_t size = 0;
    std::size_t k = 0;
    std::size_t theory_max = 0;
    std::size_t actual = 0;
    std::string construction;
};

struct StateMetrics {
    double mg_eps2 = 0.0;
    double mu_eps2 = 0.0;
    double r = 0.0;
    bool r_infinite = false;
    double epsilon = 0.0;
    std::size_t total_shots = 0;
    std::vector<std::size_t> per_collection_shots;
};

struct Verification {
    std::string mode;
    bool passed = true;
    std::size_t states = 0;
    std::uint64_t seed = 0;
    std::size_t shots = 0;
    std::size_t checks = 0;
    /// Exact mode: largest |reconstructed - direct|. Shots mode: largest deviation in sigmas.
    double worst = 0.0;
    std::string counterexample;
};

struct RunReport {
    std::string command;
    std::string input_digest;
    std::size_t num_qubits = 0;
    std::size_t num_terms = 0;
    std::string strategy;
    std::size_t n_collections = 0;
    double mean_collection_size = 0.0;
    double mean_independent = 0.0;
    double r_hat = 1.0;
    std::optional<RExactStats> r_exact;
    std::vector<CollectionGates> gates;
    std::optional<StateMetrics> state;
    std::optional<Verification> verification;
    std::vector<std::string> warnings;
    std::optional<double> wall_seconds;
};

std::string report_to_json(const RunReport &report);

}  // namespace paulimeas::cli
