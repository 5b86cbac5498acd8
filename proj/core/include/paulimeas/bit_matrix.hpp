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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paulimeas {

/// Packed bit vector over GF(2).
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t num_bits);

    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept {
        return num_bits_;
    }
    bool get(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    bool operator[](std::size_t i) const noexcept {
        return get(i);
    }
    void set(std::size_t i, bool value) noexcept {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::span<std::uint64_t> words() noexcept {
        return words_;
    }
    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }

    std::size_t popcount() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept {
        return !any();
    }
    /// Indices of set bits in increasing order.
    std::vector<std::size_t> ones() const;

    bool operator==(const BitVector &other) const = default;

    std::string str() const;

   private:
    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Parity of the bitwise AND of two equal-length vectors.
bool dot(const BitVector &a, const BitVector &b);

/// Dense row-major bit-packed matrix over GF(2).
///
/// Each row occupies `words_per_row()` consecutive 64-bit words; padding bits past
/// `cols()` are always zero. Row XOR is the primitive every algorithm here is built on;
/// column work is done as row work on the transpose.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Builds a matrix from strings of '0'/'1', one per row.
    static BitMatrix from_rows(const std::vector<std::string> &rows);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    std::size_t words_per_row() const noexcept {
        return stride_;
    }
    bool empty() const noexcept {
        return rows_ == 0 || cols_ == 0;
    }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value) noexcept {
        std::uint64_t &w = data_[r * stride_ + (c >> 6)];
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) noexcept {
        data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    std::span<std::uint64_t> row(std::size_t r) noexcept {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<const std::uint64_t> row(std::size_t r) const noexcept {
        return {data_.data() + r * stride_, stride_};
    }
    BitVector row_vector(std::size_t r) const;
    BitVector col_vector(std::size_t c) const;
    void set_row(std::size_t r, const BitVector &bits);
    void set_col(std::size_t c, const BitVector &bits);

    /// row[dst] ^= row[src].
    void xor_row_into(std::size_t src, std::size_t dst) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    bool row_is_zero(std::size_t r) const noexcept;
    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;

    BitMatrix transposed() const;
    BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const BitMatrix &src);
    BitMatrix select_cols(std::span<const std::size_t> cols) const;
    BitMatrix select_rows(std::span<const std::size_t> rows) const;

    static BitMatrix hstack(const BitMatrix &left, const BitMatrix &right);
    static BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);

    BitMatrix &operator^=(const BitMatrix &other);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix &b) {
        return a ^= b;
    }
    friend BitMatrix operator+(BitMatrix a, const BitMatrix &b) {
        return a ^= b;
    }
    friend BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);

    bool operator==(const BitMatrix &other) const = default;

    bool is_symmetric() const;
    /// Rows rendered as '0'/'1' strings joined by newlines.
    std::string str() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace paulimeas
