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

#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "paulimeas/grouping.hpp"
#include "paulimeas/rng.hpp"

namespace paulimeas::cli {

namespace {

const ColouringStrategy kStrategies[] = {ColouringStrategy::LargestFirst, ColouringStrategy::ConnectedSequentialDfs,
                                         ColouringStrategy::Dsatur, ColouringStrategy::IndependentSet};

/// Best per-call time over a few batches; each batch runs for at least min_seconds.
template <typename F>
double time_repeated(double min_seconds, std::size_t batches, F &&body) {
    using clock = std::chrono::steady_clock;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < batches; b++) {
        std::size_t reps = 0;
        auto start = clock::now();
        double elapsed = 0.0;
        do {
            body();
            reps++;
            elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < min_seconds);
        best = std::min(best, elapsed / static_cast<double>(reps));
    }
    return best;
}

}  // namespace

WeightedPauliSum synthetic_operator(std::size_t terms, std::size_t qubits, std::uint64_t seed) {
    if (qubits == 0) {
        throw std::invalid_argument("bench: qubit count must be positive");
    }
    if (qubits < 32 && terms >= (std::size_t{1} << (2 * qubits))) {
        throw std::invalid_argument("bench: not enough distinct Pauli strings for the requested term count");
    }
    Rng rng(seed);
    std::unordered_set<Pauli, PauliHash> seen;
    std::vector<PauliTerm> out;
    out.reserve(terms);
    while (out.size() < terms) {
        Pauli p(qubits);
        // Sparse-ish strings, like a fermionic Hamiltonian under a qubit mapping.
        std::size_t support = 1 + rng.below(qubits);
        for (std::size_t s = 0; s < support; s++) {
            p.set(rng.below(qubits), static_cast<PauliLetter>(1 + rng.below(3)));
        }
        if (p.is_identity() || !seen.insert(p).second) {
            continue;
        }
        double c = std::exp(-4.0 * rng.uniform()) * (rng.coin() ? 1.0 : -1.0);
        out.push_back({c, std::move(p)});
    }
    return WeightedPauliSum(qubits, std::move(out));
}

std::vector<std::size_t> bench_sweep(std::size_t max_terms) {
    std::vector<std::size_t> ts;
    for (std::size_t t = 1; t < max_terms; t *= 2) {
        ts.push_back(t);
    }
    if (max_terms > 0) {
        ts.push_back(max_terms);
    }
    return ts;
}

std::size_t variant_count(const BenchOptions &options, std::size_t t) {
    return std::clamp<std::size_t>(options.variant_terms / std::max<std::size_t>(t, 1), 2, 64);
}

std::vector<BenchPoint> run_bench(const BenchOptions &options) {
    // ops[i][v]: variant v of the operator for sweep point i.
    std::vector<std::vector<WeightedPauliSum>> ops;
    std::vector<BenchPoint> points;
    for (std::size_t t : bench_sweep(options.max_terms)) {
        ops.emplace_back();
        for (std::size_t v = 0; v < variant_count(options, t); v++) {
            ops.back().push_back(synthetic_operator(t, options.qubits, derive_seed(derive_seed(options.seed, t), v)));
        }
        BenchPoint pt;
        pt.terms = t;
        pt.sorted_insertion_seconds = std::numeric_limits<double>::infinity();
        points.push_back(pt);
    }
    // Batches sweep the whole series in turn, so a slow stretch on a shared machine lands on
    // every point rather than on one.
    for (std::size_t b = 0; b < options.batches; b++) {
        for (std::size_t i = 0; i < points.size(); i++) {
            BenchPoint &pt = points[i];
            std::size_t next = 0;
            double s = time_repeated(options.min_seconds, 1, [&] {
                (void)sorted_insertion(ops[i][next]);
                next = (next + 1) % ops[i].size();
            });
            pt.sorted_insertion_seconds = std::min(pt.sorted_insertion_seconds, s);
        }
    }
    for (std::size_t i = 0; i < points.size(); i++) {
        BenchPoint &pt = points[i];
        pt.collections = sorted_insertion(ops[i][0]).collections.size();
        if (pt.terms > options.graph_max_terms) {
            continue;
        }
        std::vector<Pauli> ps = ops[i][0].paulis();
        BitMatrix graph;
        pt.graph_seconds = time_repeated(options.min_seconds, options.batches, [&] { graph = anticommutation_graph(ps); });
        for (ColouringStrategy s : kStrategies) {
            pt.colouring_seconds.push_back(
                time_repeated(options.min_seconds, options.batches, [&] { (void)greedy_colouring(graph, s); }));
        }
    }
    return points;
}

std::string bench_to_json(const BenchOptions &options, const std::vector<BenchPoint> &points) {
    nlohmann::json j;
    j["schema"] = "paulimeas.bench/1";
    j["qubits"] = options.qubits;
    j["seed"] = options.seed;
    j["max_terms"] = options.max_terms;
    j["graph_max_terms"] = options.graph_max_terms;
    j["batches"] = options.batches;
    std::vector<std::string> names;
    for (ColouringStrategy s : kStrategies) {
        names.push_back(strategy_name(s));
    }
    j["colouring_strategies"] = names;
    j["series"] = nlohmann::json::array();
    for (std::size_t i = 0; i < points.size(); i++) {
        const BenchPoint &p = points[i];
        nlohmann::json e;
        e["terms"] = p.terms;
        e["collections"] = p.collections;
        e["variants"] = variant_count(options, p.terms);
        e["sorted_insertion_seconds"] = p.sorted_insertion_seconds;
        if (i > 0 && points[i - 1].sorted_insertion_seconds > 0) {
            e["growth_ratio"] = p.sorted_insertion_seconds / points[i - 1].sorted_insertion_seconds;
        }
        if (p.graph_seconds >= 0) {
            e["graph_seconds"] = p.graph_seconds;
            e["colouring_seconds"] = p.colouring_seconds;
        }
        j["series"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace paulimeas::cli
