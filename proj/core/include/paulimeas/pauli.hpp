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
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paulimeas/bit_matrix.hpp"

namespace paulimeas {

/// Single-qubit letter. Bit 0 is the X part, bit 1 the Z part, so Y = X | Z.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(PauliLetter p);
PauliLetter letter_from_char(char c);

/// Sign-free n-qubit Pauli string in the binary symplectic encoding.
class Pauli {
   public:
    Pauli() = default;
    explicit Pauli(std::size_t num_qubits);
    Pauli(BitVector z, BitVector x);

    /// Dense form, one letter per qubit starting at qubit 0: "XIZY".
    static Pauli from_dense(std::string_view letters);
    /// Sparse form "X0 Y3 Z5" (0-indexed). The empty string is the identity.
    static Pauli from_sparse(std::string_view text, std::size_t num_qubits);

    std::size_t num_qubits() const noexcept {
        return z_.size();
    }
    const BitVector &z() const noexcept {
        return z_;
    }
    const BitVector &x() const noexcept {
        return x_;
    }
    bool z(std::size_t q) const noexcept {
        return z_.get(q);
    }
    bool x(std::size_t q) const noexcept {
        return x_.get(q);
    }
    PauliLetter letter(std::size_t q) const noexcept {
        return static_cast<PauliLetter>(static_cast<int>(x_.get(q)) | (static_cast<int>(z_.get(q)) << 1));
    }
    void set(std::size_t q, PauliLetter p) noexcept {
        x_.set(q, static_cast<int>(p) & 1);
        z_.set(q, static_cast<int>(p) & 2);
    }

    std::size_t weight() const;
    bool is_identity() const noexcept {
        return z_.none() && x_.none();
    }
    /// True when there is no X or Y anywhere.
    bool is_z_string() const noexcept {
        return x_.none();
    }

    std::string dense_str() const;
    std::string sparse_str() const;

    bool operator==(const Pauli &other) const = default;
    /// Lexicographic on (z words, x words); only used for ordered containers.
    bool operator<(const Pauli &other) const;

   private:
    BitVector z_;
    BitVector x_;
};

struct PauliHash {
    std::size_t operator()(const Pauli &p) const noexcept;
};

/// i^phase * pauli, with Y taken as the Hermitian Y = i X Z.
struct PhasedPauli {
    Pauli pauli;
    int phase = 0;

    bool operator==(const PhasedPauli &other) const = default;
};

struct PauliTerm {
    double coeff = 0.0;
    Pauli pauli;
};

/// A real-weighted sum of distinct non-identity Paulis plus a constant offset.
class WeightedPauliSum {
   public:
    WeightedPauliSum() = default;
    /// Merges duplicates (first appearance fixes the position), moves identity terms into
    /// the offset and drops terms whose merged coefficient is exactly zero.
    WeightedPauliSum(std::size_t num_qubits, const std::vector<PauliTerm> &terms, double identity_offset = 0.0);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return terms_.size();
    }
    const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    const PauliTerm &operator[](std::size_t i) const {
        return terms_[i];
    }
    double identity_offset() const noexcept {
        return identity_offset_;
    }
    std::vector<Pauli> paulis() const;

    bool operator==(const WeightedPauliSum &other) const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliTerm> terms_;
    double identity_offset_ = 0.0;
};

bool commutes(const Pauli &p, const Pauli &q);
/// Letter-by-letter commutation on every qubit.
bool qubitwise_commutes(const Pauli &p, const Pauli &q);
/// Bit q set iff at most one distinct non-identity letter appears at q across the collection.
BitVector qubitwise_commute_mask(std::span<const Pauli> collection);

PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q);
PhasedPauli multiply(const Pauli &p, const Pauli &q);

/// 2n x m matrix whose column j is collection[j]; Z part on top.
BitMatrix to_symplectic(std::span<const Pauli> collection);
Pauli column_pauli(const BitMatrix &s, std::size_t col);
/// Carries the indices of an anticommuting pair found where commutation was required.
struct NonCommutingError : std::invalid_argument {
    NonCommutingError(std::size_t a, std::size_t b, const std::string &what)
        : std::invalid_argument(what), first(a), second(b) {
    }
    std::size_t first;
    std::size_t second;
};

/// Throws NonCommutingError for the first anticommuting pair (in index order).
void require_commuting(std::span<const Pauli> collection);

}  // namespace paulimeas
