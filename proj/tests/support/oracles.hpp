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

// Test-only reference implementations. These deliberately share no code with the library:
// Paulis and gates are built as explicit dense matrices from their textbook definitions.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "paulimeas/circuit.hpp"
#include "paulimeas/pauli.hpp"
#include "paulimeas/rng.hpp"

namespace paulimeas::testing {

using Dense = Eigen::MatrixXcd;

/// Tensor product with basis-index bit q equal to qubit q.
Dense dense_pauli(const Pauli &p);
Dense dense_phased(const PhasedPauli &p);
Dense dense_gate(const Gate &g, std::size_t n);
/// Product G_last ... G_first.
Dense dense_unitary(const CliffordCircuit &c);
/// Same unitary, built by applying each gate to the rows of the identity: O(gates 4^n)
/// instead of a full matrix product per gate.
Dense dense_unitary_rows(const CliffordCircuit &c);

/// Checks U P == sign Z(mask) U entry by entry, which is U P U^dag == sign Z(mask) for
/// unitary U. P is expanded column by column from its Kronecker factors.
double conjugation_residual(const Dense &u, const Pauli &p, int sign, const BitVector &mask);

/// Product of Z on the qubits set in mask.
Dense dense_z_string(const BitVector &mask);

double max_abs_diff(const Dense &a, const Dense &b);

Pauli random_pauli(std::size_t n, Rng &rng, bool allow_identity = true);
CliffordCircuit random_circuit(std::size_t n, std::size_t gates, Rng &rng);

/// m products of k independent commuting generators (images of Z_0..Z_{k-1} under a random
/// Clifford); the generators themselves come first so the rank is exactly k.
std::vector<Pauli> random_commuting_collection(std::size_t n, std::size_t k, std::size_t m, Rng &rng);

/// Random operator with t distinct non-identity terms and coefficients in [-1, 1].
WeightedPauliSum random_operator(std::size_t n, std::size_t t, Rng &rng);

}  // namespace paulimeas::testing
