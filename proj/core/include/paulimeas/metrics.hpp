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
#include <vector>

#include "paulimeas/grouping.hpp"
#include "paulimeas/statevector.hpp"

namespace paulimeas {

using RealMatrix = std::vector<std::vector<double>>;

struct MetricReport {
    double r_hat = 1.0;
    std::size_t n_collections = 0;
    double mean_collection_size = 0.0;
    /// sqrt(sum_j a_ij^2) for each collection.
    std::vector<double> per_collection_weight;
};

/// State-independent ratio (sum |a| / sum_i sqrt(sum_j a_ij^2))^2.
double r_hat(const WeightedPauliSum &op, const Arrangement &arr);
MetricReport metric_report(const WeightedPauliSum &op, const Arrangement &arr);

/// Cov(P_a, P_b) for the members of each collection, in collection order.
std::vector<RealMatrix> covariance_matrix(const WeightedPauliSum &op, const Arrangement &arr,
                                          const StateVector &state);

/// Var[O_i] = a_i^T C_i a_i for each collection.
std::vector<double> collection_variances(const WeightedPauliSum &op, const Arrangement &arr,
                                         const StateVector &state);

/// State-dependent ratio M_u / M_g. When every collection variance is zero the ratio is
/// reported as infinite (value stays +inf and `infinite` is set).
struct RValue {
    double value = 1.0;
    bool infinite = false;
};
RValue r_exact(const WeightedPauliSum &op, const Arrangement &arr, const StateVector &state);

/// M_g * eps^2 = (sum_i sqrt(Var[O_i]))^2.
double mg_eps2(const std::vector<double> &variances);
/// M_u * eps^2 = (sum_ij |a_ij| sqrt(Var[P_ij]))^2, i.e. mg_eps2 of the singleton arrangement.
double mu_eps2(const WeightedPauliSum &op, const StateVector &state);

struct ShotPlan {
    double m_g = 0.0;
    std::size_t total_shots = 0;
    std::vector<std::size_t> per_collection_shots;
    double epsilon = 0.0;
};

/// Optimal allocation N_i proportional to sqrt(Var[O_i]). The total is ceil(M_g), raised if
/// needed so that every collection gets at least one shot; zero-variance collections get
/// exactly one and the rest is split by largest remainder.
ShotPlan shot_plan(const std::vector<double> &variances, double epsilon);

}  // namespace paulimeas
