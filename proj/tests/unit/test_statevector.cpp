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
#include "paulimeas/statevector.hpp"

using namespace paulimeas;
using namespace paulimeas::testing;

namespace {

Eigen::VectorXcd to_eigen(const StateVector &s) {
    Eigen::VectorXcd v(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); i++) {
        v(i) = s[i];
    }
    return v;
}

}  // namespace

TEST(StateVector, HadamardAndCz) {
    StateVector s(1);
    apply_gate(Gate::h(0), s);
    EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
    StateVector t = StateVector::basis(2, 3);
    apply_gate(Gate::cz(0, 1), t);
    EXPECT_EQ(t[3], Amplitude(-1.0));
}

TEST(StateVector, CapAndNormalization) {
    EXPECT_THROW(StateVector(15), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(StateVector, ApplyCircuitMatchesDenseOracle) {
    Rng rng(6);
    for (int t = 0; t < 10; t++) {
        CliffordCircuit c = random_circuit(6, 40, rng);
        StateVector psi = random_state(6, rng);
        StateVector out = apply_circuit(c, psi);
        Eigen::VectorXcd want = dense_unitary(c) * to_eigen(psi);
        EXPECT_LT((to_eigen(out) - want).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    }
}

TEST(Expectation, BasisStates) {
    // |01>: qubit 0 is 0 and qubit 1 is 1.
    StateVector s = StateVector::basis(2, 0b10);
    EXPECT_DOUBLE_EQ(expectation(Pauli::from_dense("ZZ"), s), -1.0);
    EXPECT_DOUBLE_EQ(expectation(Pauli::from_dense("XX"), s), 0.0);
    StateVector plus(1);
    apply_gate(Gate::h(0), plus);
    EXPECT_NEAR(expectation(Pauli::from_dense("X"), plus), 1.0, 1e-15);
}

TEST(Expectation, MatchesDenseOracle) {
    Rng rng(8);
    for (int t = 0; t < 50; t++) {
        std::size_t n = 1 + rng.below(5);
        StateVector psi = random_state(n, rng);
        Pauli p = random_pauli(n, rng);
        Eigen::VectorXcd v = to_eigen(psi);
        std::complex<double> want = (v.adjoint() * dense_pauli(p) * v)(0, 0);
        EXPECT_NEAR(expectation(p, psi), want.real(), 1e-12);
        EXPECT_LE(std::abs(expectation(p, psi)), 1.0 + 1e-12);
    }
}

TEST(Sample, DeterministicAndCorrectFrequencies) {
    StateVector zero(3);
    ShotRecord r = sample(CliffordCircuit(3), zero, 100, 4);
    for (std::uint64_t o : r.outcomes) {
        EXPECT_EQ(o, 0u);
    }
    CliffordCircuit hh(2);
    hh.h(0);
    hh.h(1);
    const std::size_t shots = 100000;
    ShotRecord a = sample(hh, StateVector(2), shots, 99);
    ShotRecord b = sample(hh, StateVector(2), shots, 99);
    EXPECT_EQ(a.outcomes, b.outcomes);
    std::vector<std::size_t> counts(4, 0);
    for (std::uint64_t o : a.outcomes) {
        counts[o]++;
    }
    const double sigma = std::sqrt(shots * 0.25 * 0.75);
    for (std::size_t c : counts) {
        EXPECT_LT(std::abs(static_cast<double>(c) - shots * 0.25), 5 * sigma);
    }
    EXPECT_EQ(a.bitstring(0).size(), 2u);
}

TEST(Reconstruct, IdentityRowAndExactMode) {
    MeasurementMap map;
    map.parity = BitMatrix(2, 2);
    map.parity.set(1, 1, true);
    map.signs = {1, -1};
    map.qubit_relabeling = {1, 0};
    // Row 1 reads logical qubit 1, which is physical qubit 0.
    StateVector s = StateVector::basis(2, 0b01);
    std::vector<double> exact = reconstruct_exact(probabilities(s), map);
    EXPECT_DOUBLE_EQ(exact[0], 1.0);
    EXPECT_DOUBLE_EQ(exact[1], 1.0);
    ShotRecord rec = sample(CliffordCircuit(2), s, 10, 1);
    std::vector<double> est = reconstruct(rec, map);
    EXPECT_DOUBLE_EQ(est[0], 1.0);
    EXPECT_DOUBLE_EQ(est[1], 1.0);
}

TEST(RandomState, SeededAndNormalized) {
    StateVector a = random_state(3, 42), b = random_state(3, 42);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
    Rng rng(0);
    for (int t = 0; t < 100; t++) {
        EXPECT_NEAR(random_state(4, rng).norm(), 1.0, 1e-12);
    }
}

TEST(RandomState, SingleQubitZSquaredAveragesToOneThird) {
    Rng rng(123);
    const int samples = 20000;
    double sum = 0, sumsq = 0;
    for (int t = 0; t < samples; t++) {
        double z = expectation(Pauli::from_dense("Z"), random_state(1, rng));
        sum += z * z;
        sumsq += z * z * z * z;
    }
    double mean = sum / samples;
    double sd = std::sqrt((sumsq / samples - mean * mean) / samples);
    EXPECT_LT(std::abs(mean - 1.0 / 3.0), 4 * sd);
}
