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

#include "paulimeas/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace paulimeas {

namespace {

void require_terms(const WeightedPauliSum &op) {
    if (op.size() == 0) {
        throw std::invalid_argument("operator has no non-identity terms");
    }
}

/// <P_a P_b> for commuting P_a, P_b; the product is Hermitian so the phase is 0 or 2.
double product_expectation(const Pauli &a, const Pauli &b, const StateVector &state) {
    PhasedPauli prod = multiply(a, b);
    if (prod.phase % 2 != 0) {
        throw std::invalid_argument("covariance requested for anticommuting Paulis");
    }
    double e = prod.pauli.is_identity() ? 1.0 : expectation(prod.pauli, state);
    return prod.phase == 2 ? -e : e;
}

}  // namespace

double r_hat(const WeightedPauliSum &op, const Arrangement &arr) {
    require_terms(op);
    double numerator = 0;
    double denominator = 0;
    for (const auto &col : arr.collections) {
        double sq = 0;
        for (std::size_t idx : col) {
            numerator += std::abs(op[idx].coeff);
            sq += op[idx].coeff * op[idx].coeff;
        }
        denominator += std::sqrt(sq);
    }
    double ratio = numerator / denominator;
    return ratio * ratio;
}

MetricReport metric_report(const WeightedPauliSum &op, const Arrangement &arr) {
    MetricReport rep;
    rep.r_hat = r_hat(op, arr);
    rep.n_collections = arr.size();
    std::size_t total = 0;
    for (const auto &col : arr.collections) {
        double sq = 0;
        for (std::size_t idx : col) {
            sq += op[idx].coeff * op[idx].coeff;
        }
        rep.per_collection_weight.push_back(std::sqrt(sq));
        total += col.size();
    }
    rep.mean_collection_size = arr.size() ? static_cast<double>(total) / static_cast<double>(arr.size()) : 0.0;
    return rep;
}

std::vector<RealMatrix> covariance_matrix(const WeightedPauliSum &op, const Arrangement &arr,
                                          const StateVector &state) {
    require_terms(op);
    state.require_normalized();
    if (state.num_qubits() != op.num_qubits()) {
        throw std::invalid_argument("state and operator widths differ");
    }
    std::vector<double> mean(op.size());
    for (std::size_t i = 0; i < op.size(); i++) {
        mean[i] = expectation(op[i].pauli, state);
    }
    std::vector<RealMatrix> out;
    out.reserve(arr.size());
    for (const auto &col : arr.collections) {
        const std::size_t m = col.size();
        RealMatrix c(m, std::vector<double>(m, 0.0));
        for (std::size_t a = 0; a < m; a++) {
            c[a][a] = 1.0 - mean[col[a]] * mean[col[a]];
            for (std::size_t b = a + 1; b < m; b++) {
                double v = product_expectation(op[col[a]].pauli, op[col[b]].pauli, state) - mean[col[a]] * mean[col[b]];
                c[a][b] = c[b][a] = v;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<double> collection_variances(const WeightedPauliSum &op, const Arrangement &arr,
                                         const StateVector &state) {
    std::vector<RealMatrix> cov = covariance_matrix(op, arr, state);
    std::vector<double> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); i++) {
        const auto &col = arr.collections[i];
        double v = 0;
        for (std::size_t a = 0; a < col.size(); a++) {
            for (std::size_t b = 0; b < col.size(); b++) {
                v += op[col[a]].coeff * cov[i][a][b] * op[col[b]].coeff;
            }
        }
        // Rounding can push an exactly-zero variance very slightly negative.
        out.push_back(std::max(v, 0.0));
    }
    return out;
}

double mg_eps2(const std::vector<double> &variances) {
    double s = 0;
    for (double v : variances) {
        if (v < 0) {
            throw std::invalid_argument("negative variance");
        }
        s += std::sqrt(v);
    }
    return s * s;
}

double mu_eps2(const WeightedPauliSum &op, const StateVector &state) {
    return mg_eps2(collection_variances(op, singleton_arrangement(op), state));
}

RValue r_exact(const WeightedPauliSum &op, const Arrangement &arr, const StateVector &state) {
    double g = mg_eps2(collection_variances(op, arr, state));
    double u = mu_eps2(op, state);
    if (g == 0.0) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {u / g, false};
}

ShotPlan shot_plan(const std::vector<double> &variances, double epsilon) {
    if (!(epsilon > 0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    if (variances.empty()) {
        throw std::invalid_argument("shot_plan: no collections");
    }
    ShotPlan plan;
    plan.epsilon = epsilon;
    plan.m_g = mg_eps2(variances) / (epsilon * epsilon);
    const std::size_t n = variances.size();
    // Guard the ceiling against representation error (400.00000000000006 -> 400).
    auto ceil_total = static_cast<std::size_t>(std::ceil(plan.m_g * (1.0 - 1e-12)));
    plan.total_shots = std::max(ceil_total, n);
    plan.per_collection_shots.assign(n, 0);

    std::vector<std::size_t> live;
    double root_sum = 0;
    for (std::size_t i = 0; i < n; i++) {
        if (variances[i] == 0.0) {
            plan.per_collection_shots[i] = 1;
        } else {
            live.push_back(i);
            root_sum += std::sqrt(variances[i]);
        }
    }
    const std::size_t remaining = plan.total_shots - (n - live.size());
    if (live.empty()) {
        // Nothing to estimate; the extra shots (if any) go to the first collection.
        plan.per_collection_shots[0] += remaining;
        return plan;
    }
    // Every live collection first gets one shot, the remainder is shared proportionally.
    const std::size_t spare = remaining - live.size();
    std::vector<std::pair<double, std::size_t>> fractions;
    std::size_t assigned = 0;
    for (std::size_t i : live) {
        double share = static_cast<double>(spare) * std::sqrt(variances[i]) / root_sum;
        auto whole = static_cast<std::size_t>(std::floor(share));
        plan.per_collection_shots[i] = 1 + whole;
        assigned += whole;
        fractions.emplace_back(share - static_cast<double>(whole), i);
    }
    std::stable_sort(fractions.begin(), fractions.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    for (std::size_t r = 0; r < spare - assigned; r++) {
        plan.per_collection_shots[fractions[r % fractions.size()].second]++;
    }
    return plan;
}

}  // namespace paulimeas
