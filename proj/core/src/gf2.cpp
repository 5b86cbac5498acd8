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

#include "paulimeas/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace paulimeas {

namespace {

/// Bits [start, start + width) of row r packed into an integer, bit b = column start + b.
std::uint64_t row_bits(const BitMatrix &m, std::size_t r, std::size_t start, std::size_t width) {
    std::uint64_t pattern = 0;
    for (std::size_t b = 0; b < width; b++) {
        if (m.get(r, start + b)) {
            pattern |= std::uint64_t{1} << b;
        }
    }
    return pattern;
}

std::size_t floor_log2(std::size_t k) {
    return k == 0 ? 0 : static_cast<std::size_t>(std::bit_width(k) - 1);
}

/// Clears everything below the diagonal of a square invertible matrix. Ops are recorded
/// in the order they were applied.
void pmh_lower_pass(BitMatrix &w, std::size_t section, RowOpList &ops) {
    const std::size_t k = w.rows();
    std::vector<std::ptrdiff_t> first_with_pattern;
    for (std::size_t start = 0; start < k; start += section) {
        const std::size_t width = std::min(section, k - start);
        first_with_pattern.assign(std::size_t{1} << width, -1);
        for (std::size_t r = start; r < k; r++) {
            std::uint64_t pattern = row_bits(w, r, start, width);
            if (pattern == 0) {
                continue;
            }
            if (first_with_pattern[pattern] < 0) {
                first_with_pattern[pattern] = static_cast<std::ptrdiff_t>(r);
            } else {
                auto src = static_cast<std::size_t>(first_with_pattern[pattern]);
                w.xor_row_into(src, r);
                ops.push_add(src, r);
            }
        }
        for (std::size_t c = start; c < start + width; c++) {
            bool diagonal = w.get(c, c);
            for (std::size_t r = c + 1; r < k; r++) {
                if (!w.get(r, c)) {
                    continue;
                }
                if (!diagonal) {
                    w.xor_row_into(r, c);
                    ops.push_add(r, c);
                    diagonal = true;
                }
                w.xor_row_into(c, r);
                ops.push_add(c, r);
            }
            if (!diagonal) {
                throw SingularMatrixError("pmh_reduce: matrix is singular");
            }
        }
    }
}

}  // namespace

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, {}, BitMatrix::identity(m.rows())};
    BitMatrix &red = result.reduced;
    BitMatrix &tr = result.transform;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); c++) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !red.get(r, c)) {
            r++;
        }
        if (r == m.rows()) {
            continue;
        }
        red.swap_rows(r, pivot_row);
        tr.swap_rows(r, pivot_row);
        for (std::size_t other = 0; other < m.rows(); other++) {
            if (other != pivot_row && red.get(other, c)) {
                red.xor_row_into(pivot_row, other);
                tr.xor_row_into(pivot_row, other);
            }
        }
        result.pivot_cols.push_back(c);
        pivot_row++;
    }
    return result;
}

std::size_t rank(const BitMatrix &m) {
    return independent_rows(m).size();
}

BitMatrix invert(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("invert: matrix is not square");
    }
    RrefResult r = rref(m);
    if (r.rank() != m.rows()) {
        throw SingularMatrixError("invert: matrix is singular");
    }
    return r.transform;
}

std::vector<std::size_t> independent_rows(const BitMatrix &m) {
    std::vector<BitVector> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < m.rows(); r++) {
        BitVector v = m.row_vector(r);
        for (std::size_t b = 0; b < basis.size(); b++) {
            if (v.get(pivots[b])) {
                v ^= basis[b];
            }
        }
        if (v.none()) {
            continue;
        }
        pivots.push_back(v.ones().front());
        basis.push_back(std::move(v));
        chosen.push_back(r);
    }
    return chosen;
}

CholeskyResult cholesky_gf2(const BitMatrix &e) {
    if (!e.is_symmetric()) {
        throw std::invalid_argument("cholesky_gf2: input is not symmetric");
    }
    const std::size_t k = e.rows();
    // Unit lower-triangular L with L L^T equal to e off the diagonal.
    std::vector<BitVector> lower(k, BitVector(k));
    for (std::size_t i = 0; i < k; i++) {
        lower[i].set(i, true);
        for (std::size_t j = 0; j < i; j++) {
            // sum_{p<j} L_ip L_jp; L_j is zero past column j and L_i is only filled below j so far.
            BitVector prefix = lower[i] & lower[j];
            prefix.set(j, false);
            bool bit = e.get(i, j) ^ (prefix.popcount() & 1);
            lower[i].set(j, bit);
        }
    }
    CholeskyResult result{BitVector(k), BitMatrix(k, k)};
    for (std::size_t i = 0; i < k; i++) {
        bool diag_of_product = lower[i].popcount() & 1;
        result.lambda_diag.set(i, e.get(i, i) ^ diag_of_product);
        for (std::size_t j : lower[i].ones()) {
            result.m.set(j, i, true);
        }
    }
    return result;
}

std::size_t RowOpList::add_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const RowOp &op) { return op.kind == RowOp::Kind::Add; }));
}

BitMatrix RowOpList::replay(BitMatrix m) const {
    for (const RowOp &op : ops_) {
        if (op.source >= m.rows() || op.target >= m.rows()) {
            throw std::out_of_range("RowOpList::replay: row index out of range");
        }
        if (op.kind == RowOp::Kind::Add) {
            m.xor_row_into(op.source, op.target);
        } else {
            m.swap_rows(op.source, op.target);
        }
    }
    return m;
}

RowOpList gaussian_reduce(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("gaussian_reduce: matrix is not square");
    }
    BitMatrix w = m;
    RowOpList ops;
    const std::size_t k = m.rows();
    for (std::size_t c = 0; c < k; c++) {
        if (!w.get(c, c)) {
            std::size_t r = c + 1;
            while (r < k && !w.get(r, c)) {
                r++;
            }
            if (r == k) {
                throw SingularMatrixError("gaussian_reduce: matrix is singular");
            }
            w.xor_row_into(r, c);
            ops.push_add(r, c);
        }
        for (std::size_t r = 0; r < k; r++) {
            if (r != c && w.get(r, c)) {
                w.xor_row_into(c, r);
                ops.push_add(c, r);
            }
        }
    }
    return ops;
}

std::size_t pmh_section_width(std::size_t k) {
    return std::max<std::size_t>(1, floor_log2(k) / 2);
}

std::size_t pmh_bound(std::size_t k) {
    if (k < 4) {
        return k * k;
    }
    const std::size_t section = pmh_section_width(k);
    std::size_t per_pass = 0;
    for (std::size_t start = 0; start < k; start += section) {
        std::size_t width = std::min(section, k - start);
        per_pass += (k - start) + width * (std::size_t{1} << width);
    }
    return 2 * per_pass;
}

RowOpList pmh_reduce(const BitMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("pmh_reduce: matrix is not square");
    }
    const std::size_t k = m.rows();
    if (k < 4) {
        return gaussian_reduce(m);
    }
    const std::size_t section = pmh_section_width(k);
    BitMatrix w = m;
    RowOpList ops;
    pmh_lower_pass(w, section, ops);

    // w is now unit upper triangular; reduce its transpose, then undo the transposition.
    BitMatrix t = w.transposed();
    RowOpList upper;
    pmh_lower_pass(t, section, upper);
    const auto &uops = upper.ops();
    for (auto it = uops.rbegin(); it != uops.rend(); ++it) {
        ops.push_add(it->target, it->source);
    }
    return ops;
}

std::size_t block_width(std::size_t k) {
    if (k < 2) {
        return 1;
    }
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(0.75 * std::log2(static_cast<double>(k)))));
}

double block_reduce_bound(std::size_t k, std::size_t n) {
    const double w = static_cast<double>(block_width(k));
    const double per_block = static_cast<double>(k) + w * std::pow(2.0, w - 1);
    return per_block * static_cast<double>(n - k) / w + static_cast<double>(pmh_bound(k));
}

RowOpList block_reduce(const BitMatrix &m, std::size_t k) {
    const std::size_t n = m.rows();
    if (m.cols() != n || k > n) {
        throw std::invalid_argument("block_reduce: expected a square matrix with k <= n");
    }
    if (m.block(0, 0, k, k) != BitMatrix::identity(k) || !m.block(k, 0, n - k, k).is_zero() ||
        m.block(k, k, n - k, n - k) != BitMatrix::identity(n - k)) {
        throw std::invalid_argument("block_reduce: matrix is not of the form [[I_k, A], [0, I]]");
    }
    BitMatrix w = m;
    RowOpList ops;
    const std::size_t width_max = block_width(k);
    std::vector<std::ptrdiff_t> first_with_pattern;
    for (std::size_t start = k; start < n; start += width_max) {
        const std::size_t width = std::min(width_max, n - start);
        first_with_pattern.assign(std::size_t{1} << width, -1);
        for (std::size_t r = 0; r < k; r++) {
            std::uint64_t pattern = row_bits(w, r, start, width);
            if (pattern == 0) {
                continue;
            }
            if (first_with_pattern[pattern] < 0) {
                first_with_pattern[pattern] = static_cast<std::ptrdiff_t>(r);
            } else {
                auto src = static_cast<std::size_t>(first_with_pattern[pattern]);
                w.xor_row_into(src, r);
                ops.push_add(src, r);
            }
        }
        for (std::uint64_t pattern = 1; pattern < first_with_pattern.size(); pattern++) {
            if (first_with_pattern[pattern] < 0) {
                continue;
            }
            auto r = static_cast<std::size_t>(first_with_pattern[pattern]);
            for (std::size_t b = 0; b < width; b++) {
                if ((pattern >> b) & 1U) {
                    w.xor_row_into(start + b, r);
                    ops.push_add(start + b, r);
                }
            }
        }
    }
    // w = [[B, 0], [0, I]]; finish on the k x k block.
    ops.append(pmh_reduce(w.block(0, 0, k, k)));
    return ops;
}

bool symplectic_check(const BitMatrix &s) {
    if (s.rows() % 2 != 0) {
        throw std::invalid_argument("symplectic_check: row count must be even");
    }
    const std::size_t n = s.rows() / 2;
    BitMatrix zt = s.block(0, 0, n, s.cols()).transposed();
    BitMatrix xt = s.block(n, 0, n, s.cols()).transposed();
    for (std::size_t p = 0; p < s.cols(); p++) {
        for (std::size_t q = p + 1; q < s.cols(); q++) {
            std::uint64_t acc = 0;
            auto zp = zt.row(p), xp = xt.row(p), zq = zt.row(q), xq = xt.row(q);
            for (std::size_t t = 0; t < zp.size(); t++) {
                acc ^= (zp[t] & xq[t]) ^ (xp[t] & zq[t]);
            }
            if (std::popcount(acc) & 1) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace paulimeas
