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

#include "paulimeas/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace paulimeas {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + 63) / 64;
}

}  // namespace

BitVector::BitVector(std::size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            result.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> result;
    for (std::size_t k = 0; k < words_.size(); k++) {
        std::uint64_t w = words_[k];
        while (w) {
            result.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string s(num_bits_, '0');
    for (std::size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

bool dot(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("BitVector size mismatch");
    }
    std::uint64_t acc = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t k = 0; k < wa.size(); k++) {
        acc ^= wa[k] & wb[k];
    }
    return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged rows in BitMatrix::from_rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch == '1') {
                m.set(r, c, true);
            } else if (ch != '0') {
                throw std::invalid_argument("bit string may only contain '0' and '1'");
            }
        }
    }
    return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

BitVector BitMatrix::col_vector(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector &bits) {
    if (bits.size() != cols_) {
        throw std::invalid_argument("row length mismatch");
    }
    std::copy(bits.words().begin(), bits.words().end(), row(r).begin());
}

void BitMatrix::set_col(std::size_t c, const BitVector &bits) {
    if (bits.size() != rows_) {
        throw std::invalid_argument("column length mismatch");
    }
    for (std::size_t r = 0; r < rows_; r++) {
        set(r, c, bits.get(r));
    }
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) noexcept {
    const std::uint64_t *s = data_.data() + src * stride_;
    std::uint64_t *d = data_.data() + dst * stride_;
    for (std::size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) {
        return;
    }
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

bool BitMatrix::row_is_zero(std::size_t r) const noexcept {
    auto words = row(r);
    return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitMatrix::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : data_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        auto words = row(r);
        for (std::size_t k = 0; k < stride_; k++) {
            std::uint64_t w = words[k];
            while (w) {
                std::size_t c = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
                t.set(c, r, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw std::out_of_range("BitMatrix::block out of range");
    }
    BitMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; r++) {
        for (std::size_t c = 0; c < nc; c++) {
            if (get(r0 + r, c0 + c)) {
                b.set(r, c, true);
            }
        }
    }
    return b;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix &src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) {
        throw std::out_of_range("BitMatrix::set_block out of range");
    }
    for (std::size_t r = 0; r < src.rows(); r++) {
        for (std::size_t c = 0; c < src.cols(); c++) {
            set(r0 + r, c0 + c, src.get(r, c));
        }
    }
}

BitMatrix BitMatrix::select_cols(std::span<const std::size_t> cols) const {
    BitMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t j = 0; j < cols.size(); j++) {
            if (get(r, cols[j])) {
                m.set(r, j, true);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
    BitMatrix m(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); i++) {
        std::copy_n(row(rows[i]).begin(), stride_, m.row(i).begin());
    }
    return m;
}

BitMatrix BitMatrix::hstack(const BitMatrix &left, const BitMatrix &right) {
    if (left.rows() != right.rows()) {
        throw std::invalid_argument("hstack row mismatch");
    }
    BitMatrix m(left.rows(), left.cols() + right.cols());
    m.set_block(0, 0, left);
    m.set_block(0, left.cols(), right);
    return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("vstack column mismatch");
    }
    BitMatrix m(top.rows() + bottom.rows(), top.cols());
    std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return m;
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("BitMatrix shape mismatch in addition");
    }
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] ^= other.data_[k];
    }
    return *this;
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("BitMatrix shape mismatch in multiplication");
    }
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        auto out = c.row(i);
        auto words = a.row(i);
        for (std::size_t k = 0; k < words.size(); k++) {
            std::uint64_t w = words[k];
            while (w) {
                std::size_t j = k * 64 + static_cast<std::size_t>(std::countr_zero(w));
                auto src = b.row(j);
                for (std::size_t t = 0; t < out.size(); t++) {
                    out[t] ^= src[t];
                }
                w &= w - 1;
            }
        }
    }
    return c;
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = r + 1; c < cols_; c++) {
            if (get(r, c) != get(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::string BitMatrix::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; r++) {
        if (r) {
            s.push_back('\n');
        }
        for (std::size_t c = 0; c < cols_; c++) {
            s.push_back(get(r, c) ? '1' : '0');
        }
    }
    return s;
}

}  // namespace paulimeas
