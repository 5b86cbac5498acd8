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
#include <stdexcept>
#include <vector>

#include "paulimeas/bit_matrix.hpp"

namespace paulimeas {

/// Thrown when an operation needs an invertible matrix and did not get one.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

struct RrefResult {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    /// Invertible row transform with reduced == transform * input.
    BitMatrix transform;

    std::size_t rank() const {
        return pivot_cols.size();
    }
};

/// Reduced row echelon form. Pivots are taken at the lowest available row index.
RrefResult rref(const BitMatrix &m);
std::size_t rank(const BitMatrix &m);
BitMatrix invert(const BitMatrix &m);

/// Indices of a maximal set of linearly independent rows, chosen greedily top-down.
std::vector<std::size_t> independent_rows(const BitMatrix &m);

struct CholeskyResult {
    BitVector lambda_diag;
    /// Unit upper-triangular, hence invertible.
    BitMatrix m;
};

/// Splits a symmetric matrix as e = diag(lambda) + m^T m with m invertible.
CholeskyResult cholesky_gf2(const BitMatrix &e);

/// One elementary row operation: either row[target] ^= row[source], or a swap.
struct RowOp {
    enum class Kind { Add, Swap };
    Kind kind = Kind::Add;
    std::size_t source = 0;
    std::size_t target = 0;

    static RowOp add(std::size_t source, std::size_t target) {
        return {Kind::Add, source, target};
    }
    static RowOp swap(std::size_t a, std::size_t b) {
        return {Kind::Swap, a, b};
    }
    bool operator==(const RowOp &) const = default;
};

class RowOpList {
   public:
    void push_add(std::size_t source, std::size_t target) {
        ops_.push_back(RowOp::add(source, target));
    }
    void push_swap(std::size_t a, std::size_t b) {
        ops_.push_back(RowOp::swap(a, b));
    }
    void append(const RowOpList &other) {
        ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    }

    const std::vector<RowOp> &ops() const noexcept {
        return ops_;
    }
    std::size_t size() const noexcept {
        return ops_.size();
    }
    /// Number of additions (swaps are free relabelings).
    std::size_t add_count() const noexcept;

    /// Applies the list, in order, to a copy of m.
    BitMatrix replay(BitMatrix m) const;

   private:
    std::vector<RowOp> ops_;
};

/// Plain Gauss-Jordan reduction of an invertible square matrix to identity, additions only.
RowOpList gaussian_reduce(const BitMatrix &m);

/// Section width used by pmh_reduce for a k x k input.
std::size_t pmh_section_width(std::size_t k);
/// Worst-case operation count of pmh_reduce on any invertible k x k input.
std::size_t pmh_bound(std::size_t k);

/// Two-pass Patel-Markov-Hayes reduction of an invertible square matrix to identity.
/// Inputs smaller than 4x4 fall back to gaussian_reduce.
RowOpList pmh_reduce(const BitMatrix &m);

/// Column-block width used by block_reduce: max(1, floor(3/4 * log2 k)).
std::size_t block_width(std::size_t k);
/// Closed-form allowance (k + w 2^(w-1)) (n-k) / w + pmh_bound(k).
double block_reduce_bound(std::size_t k, std::size_t n);

/// Reduces [[I_k, A], [0, I_{n-k}]] to identity with the four-Russians column-block schedule.
RowOpList block_reduce(const BitMatrix &m, std::size_t k);

/// True iff S^T J S = 0 for a 2n x m matrix whose top half is the Z part.
bool symplectic_check(const BitMatrix &s);

}  // namespace paulimeas
