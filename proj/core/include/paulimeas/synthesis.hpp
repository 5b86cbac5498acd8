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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paulimeas/bit_matrix.hpp"
#include "paulimeas/circuit.hpp"
#include "paulimeas/measurement_map.hpp"
#include "paulimeas/pauli.hpp"

namespace paulimeas {

enum class Construction { CZ, CNOT };
/// What synthesize() should run; Best tries both and keeps the cheaper one.
enum class ConstructionChoice { CZ, CNOT, Best };

std::string construction_name(Construction c);
ConstructionChoice parse_construction_choice(std::string_view name);

struct SynthesisResult {
    CliffordCircuit circuit;
    MeasurementMap map;
    std::size_t two_qubit_count = 0;
    /// Number of independent Paulis in the collection.
    std::size_t k = 0;
    Construction construction = Construction::CZ;
};

struct IndependentBasis {
    /// 2n x k, the pivot columns of the collection's symplectic matrix.
    BitMatrix basis;
    /// k x m with basis * combination equal to the full 2n x m matrix.
    BitMatrix combination;
    std::vector<std::size_t> pivot_cols;

    std::size_t k() const noexcept {
        return pivot_cols.size();
    }
};

/// Throws NonCommutingError if the collection is not mutually commuting.
IndependentBasis independent_basis(std::span<const Pauli> collection);

/// Appends n - k columns to a 2n x k matrix whose X half is [I_k; F] and whose Z half is
/// [C; D], giving X half [[I, 0], [F, I]] and Z half [[C, D^T], [D, 0]].
BitMatrix basis_extension(const BitMatrix &s2);

/// Maximum two-qubit count of the CZ construction, kn - k(k+1)/2.
std::size_t cz_count_bound(std::size_t k, std::size_t n);
/// CNOT-construction allowance 2 pmh_bound(k) + block_reduce_bound(k, n).
double cnot_count_bound(std::size_t k, std::size_t n);

/// Both constructions work on the collection as given (no qubit pruning).
SynthesisResult cz_construct(std::span<const Pauli> collection);
SynthesisResult cnot_construct(std::span<const Pauli> collection);

/// Conjugates each Pauli through the circuit; every image must be a real signed Z-string.
/// Throws std::logic_error otherwise. Returns the signs; `images` receives the Z-strings.
std::vector<int> track_signs(const CliffordCircuit &circuit, std::span<const Pauli> originals,
                             std::vector<Pauli> *images = nullptr);

struct PrunedCollection {
    /// The collection restricted to the kept qubits.
    std::vector<Pauli> reduced;
    /// Single-qubit rotations on the pruned qubits, on the full register.
    CliffordCircuit prefix;
    /// kept[i] is the original index of reduced qubit i.
    std::vector<std::size_t> kept;
    /// Original indices of the pruned qubits, ascending.
    std::vector<std::size_t> pruned;
};

/// Removes every qubit on which the collection commutes letter-by-letter. Pruned qubits get
/// H for X, S then H for Y and nothing for Z.
PrunedCollection prune_local_qubits(std::span<const Pauli> collection);

/// Prunes local qubits, runs the requested construction(s) on the rest and re-embeds the
/// result on the full register. Best picks the smaller two-qubit count, CZ on ties.
SynthesisResult synthesize(std::span<const Pauli> collection, ConstructionChoice choice);
SynthesisResult synthesize_best(std::span<const Pauli> collection);

}  // namespace paulimeas
