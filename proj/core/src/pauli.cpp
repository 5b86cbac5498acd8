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

#include "paulimeas/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

namespace paulimeas {

char letter_char(PauliLetter p) {
    static constexpr char chars[] = {'I', 'X', 'Z', 'Y'};
    return chars[static_cast<int>(p)];
}

PauliLetter letter_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

Pauli::Pauli(std::size_t num_qubits) : z_(num_qubits), x_(num_qubits) {
}

Pauli::Pauli(BitVector z, BitVector x) : z_(std::move(z)), x_(std::move(x)) {
    if (z_.size() != x_.size()) {
        throw std::invalid_argument("Pauli: z and x parts have different lengths");
    }
}

Pauli Pauli::from_dense(std::string_view letters) {
    Pauli p(letters.size());
    for (std::size_t q = 0; q < letters.size(); q++) {
        p.set(q, letter_from_char(letters[q]));
    }
    return p;
}

Pauli Pauli::from_sparse(std::string_view text, std::size_t num_qubits) {
    Pauli p(num_qubits);
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
        if (pos == text.size()) {
            break;
        }
        PauliLetter letter = letter_from_char(text[pos++]);
        std::size_t q = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), q);
        if (ec != std::errc()) {
            throw std::invalid_argument("Pauli: expected a qubit index after the letter in '" + std::string(text) + "'");
        }
        pos = static_cast<std::size_t>(end - text.data());
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            throw std::invalid_argument("Pauli: unexpected character in '" + std::string(text) + "'");
        }
        if (q >= num_qubits) {
            throw std::out_of_range("Pauli: qubit index " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        if (p.letter(q) != PauliLetter::I) {
            throw std::invalid_argument("Pauli: qubit " + std::to_string(q) + " appears twice");
        }
        p.set(q, letter);
    }
    return p;
}

std::size_t Pauli::weight() const {
    return (z_ | x_).popcount();
}

std::string Pauli::dense_str() const {
    std::string out(num_qubits(), 'I');
    for (std::size_t q = 0; q < num_qubits(); q++) {
        out[q] = letter_char(letter(q));
    }
    return out;
}

std::string Pauli::sparse_str() const {
    std::string out;
    for (std::size_t q = 0; q < num_qubits(); q++) {
        PauliLetter p = letter(q);
        if (p == PauliLetter::I) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += letter_char(p);
        out += std::to_string(q);
    }
    return out;
}

bool Pauli::operator<(const Pauli &other) const {
    if (num_qubits() != other.num_qubits()) {
        return num_qubits() < other.num_qubits();
    }
    auto a = z_.words(), b = other.z_.words();
    if (!std::equal(a.begin(), a.end(), b.begin())) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    auto c = x_.words(), d = other.x_.words();
    return std::lexicographical_compare(c.begin(), c.end(), d.begin(), d.end());
}

std::size_t PauliHash::operator()(const Pauli &p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ p.num_qubits();
    auto mix = [&h](std::uint64_t w) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (std::uint64_t w : p.z().words()) {
        mix(w);
    }
    for (std::uint64_t w : p.x().words()) {
        mix(w);
    }
    return static_cast<std::size_t>(h);
}

WeightedPauliSum::WeightedPauliSum(std::size_t num_qubits, const std::vector<PauliTerm> &terms, double identity_offset)
    : num_qubits_(num_qubits), identity_offset_(identity_offset) {
    std::unordered_map<Pauli, std::size_t, PauliHash> position;
    std::vector<PauliTerm> merged;
    for (const PauliTerm &t : terms) {
        if (t.pauli.num_qubits() != num_qubits) {
            throw std::invalid_argument("WeightedPauliSum: term has " + std::to_string(t.pauli.num_qubits()) +
                                        " qubits, expected " + std::to_string(num_qubits));
        }
        if (!std::isfinite(t.coeff)) {
            throw std::invalid_argument("WeightedPauliSum: non-finite coefficient");
        }
        if (t.pauli.is_identity()) {
            identity_offset_ += t.coeff;
            continue;
        }
        auto [it, inserted] = position.try_emplace(t.pauli, merged.size());
        if (inserted) {
            merged.push_back(t);
        } else {
            merged[it->second].coeff += t.coeff;
        }
    }
    for (PauliTerm &t : merged) {
        if (t.coeff != 0.0) {
            terms_.push_back(std::move(t));
        }
    }
}

std::vector<Pauli> WeightedPauliSum::paulis() const {
    std::vector<Pauli> out;
    out.reserve(terms_.size());
    for (const PauliTerm &t : terms_) {
        out.push_back(t.pauli);
    }
    return out;
}

bool WeightedPauliSum::operator==(const WeightedPauliSum &other) const {
    if (num_qubits_ != other.num_qubits_ || identity_offset_ != other.identity_offset_ ||
        terms_.size() != other.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < terms_.size(); i++) {
        if (terms_[i].coeff != other.terms_[i].coeff || terms_[i].pauli != other.terms_[i].pauli) {
            return false;
        }
    }
    return true;
}

namespace {

void check_same_size(const Pauli &p, const Pauli &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("Pauli qubit counts differ: " + std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(q.num_qubits()));
    }
}

}  // namespace

bool commutes(const Pauli &p, const Pauli &q) {
    check_same_size(p, q);
    auto pz = p.z().words(), px = p.x().words(), qz = q.z().words(), qx = q.x().words();
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < pz.size(); w++) {
        acc ^= (pz[w] & qx[w]) ^ (px[w] & qz[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

bool qubitwise_commutes(const Pauli &p, const Pauli &q) {
    check_same_size(p, q);
    auto pz = p.z().words(), px = p.x().words(), qz = q.z().words(), qx = q.x().words();
    for (std::size_t w = 0; w < pz.size(); w++) {
        std::uint64_t both = (pz[w] | px[w]) & (qz[w] | qx[w]);
        if (((pz[w] ^ qz[w]) | (px[w] ^ qx[w])) & both) {
            return false;
        }
    }
    return true;
}

BitVector qubitwise_commute_mask(std::span<const Pauli> collection) {
    if (collection.empty()) {
        throw std::invalid_argument("qubitwise_commute_mask: empty collection");
    }
    const std::size_t n = collection.front().num_qubits();
    BitVector mask(n);
    for (std::size_t q = 0; q < n; q++) {
        PauliLetter seen = PauliLetter::I;
        bool ok = true;
        for (const Pauli &p : collection) {
            check_same_size(p, collection.front());
            PauliLetter l = p.letter(q);
            if (l == PauliLetter::I) {
                continue;
            }
            if (seen == PauliLetter::I) {
                seen = l;
            } else if (seen != l) {
                ok = false;
                break;
            }
        }
        mask.set(q, ok);
    }
    return mask;
}

PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q) {
    check_same_size(p.pauli, q.pauli);
    // Exponent of i picked up qubit by qubit when multiplying Hermitian letters.
    int phase = p.phase + q.phase;
    const std::size_t n = p.pauli.num_qubits();
    for (std::size_t k = 0; k < n; k++) {
        int x1 = p.pauli.x(k), z1 = p.pauli.z(k), x2 = q.pauli.x(k), z2 = q.pauli.z(k);
        if (x1 && z1) {
            phase += z2 - x2;
        } else if (x1) {
            phase += z2 * (2 * x2 - 1);
        } else if (z1) {
            phase += x2 * (1 - 2 * z2);
        }
    }
    return {Pauli(p.pauli.z() ^ q.pauli.z(), p.pauli.x() ^ q.pauli.x()), ((phase % 4) + 4) % 4};
}

PhasedPauli multiply(const Pauli &p, const Pauli &q) {
    return multiply(PhasedPauli{p, 0}, PhasedPauli{q, 0});
}

BitMatrix to_symplectic(std::span<const Pauli> collection) {
    if (collection.empty()) {
        return {};
    }
    const std::size_t n = collection.front().num_qubits();
    BitMatrix s(2 * n, collection.size());
    for (std::size_t j = 0; j < collection.size(); j++) {
        const Pauli &p = collection[j];
        if (p.num_qubits() != n) {
            throw std::invalid_argument("to_symplectic: mixed qubit counts");
        }
        for (std::size_t q = 0; q < n; q++) {
            s.set(q, j, p.z(q));
            s.set(n + q, j, p.x(q));
        }
    }
    return s;
}

Pauli column_pauli(const BitMatrix &s, std::size_t col) {
    const std::size_t n = s.rows() / 2;
    Pauli p(n);
    for (std::size_t q = 0; q < n; q++) {
        int bits = static_cast<int>(s.get(n + q, col)) | (static_cast<int>(s.get(q, col)) << 1);
        p.set(q, static_cast<PauliLetter>(bits));
    }
    return p;
}

void require_commuting(std::span<const Pauli> collection) {
    for (std::size_t a = 0; a < collection.size(); a++) {
        for (std::size_t b = a + 1; b < collection.size(); b++) {
            if (!commutes(collection[a], collection[b])) {
                throw NonCommutingError(a, b,
                                        "operators " + std::to_string(a) + " (" + collection[a].sparse_str() +
                                            ") and " + std::to_string(b) + " (" + collection[b].sparse_str() +
                                            ") do not commute");
            }
        }
    }
}

}  // namespace paulimeas
