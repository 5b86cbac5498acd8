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

#include "paulimeas/synthesis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "paulimeas/gf2.hpp"

namespace paulimeas {

namespace {

void require_nonempty(std::span<const Pauli> collection) {
    if (collection.empty()) {
        throw std::invalid_argument("synthesis needs at least one Pauli");
    }
    for (const Pauli &p : collection) {
        if (p.num_qubits() != collection.front().num_qubits()) {
            throw std::invalid_argument("synthesis: mixed qubit counts in the collection");
        }
    }
}

/// Records gates on physical qubits while updating the rows of the tracked basis columns.
/// Logical qubit L lives on physical qubit perm[L].
class Builder {
   public:
    Builder(std::size_t n, BitMatrix basis) : n_(n), circuit_(n), tracked_(std::move(basis)), perm_(n) {
        std::iota(perm_.begin(), perm_.end(), 0);
    }

    void set_perm(std::vector<std::size_t> perm) {
        perm_ = std::move(perm);
    }
    const std::vector<std::size_t> &perm() const noexcept {
        return perm_;
    }
    const BitMatrix &tracked() const noexcept {
        return tracked_;
    }
    CliffordCircuit &circuit() noexcept {
        return circuit_;
    }

    void physical(const Gate &g) {
        circuit_.push(g);
        const std::size_t n = n_;
        switch (g.kind) {
            case GateKind::H:
                tracked_.swap_rows(g.q0, n + g.q0);
                break;
            case GateKind::S:
                tracked_.xor_row_into(n + g.q0, g.q0);
                break;
            case GateKind::CZ:
                tracked_.xor_row_into(n + g.q1, g.q0);
                tracked_.xor_row_into(n + g.q0, g.q1);
                break;
            case GateKind::CNOT:
                tracked_.xor_row_into(g.q1, g.q0);
                tracked_.xor_row_into(n + g.q0, n + g.q1);
                break;
        }
#ifndef NDEBUG
        if (!symplectic_check(tracked_)) {
            throw std::logic_error("synthesis: gate " + gate_str(g) + " broke the commutation condition");
        }
#endif
    }
    void h(std::size_t l) {
        physical(Gate::h(perm_[l]));
    }
    void s(std::size_t l) {
        physical(Gate::s(perm_[l]));
    }
    void cz(std::size_t a, std::size_t b) {
        physical(Gate::cz(perm_[a], perm_[b]));
    }
    void cnot(std::size_t control, std::size_t target) {
        physical(Gate::cnot(perm_[control], perm_[target]));
    }

   private:
    std::size_t n_;
    CliffordCircuit circuit_;
    BitMatrix tracked_;
    std::vector<std::size_t> perm_;
};

/// Shared front half of both constructions: Hadamards until the X block has rank k, the
/// pivot relabeling, and the symmetric matrix A of the completed stabilizer group in the
/// frame where its X block is the identity.
struct Canonical {
    std::size_t n = 0;
    std::size_t k = 0;
    IndependentBasis ib;
    Builder builder;
    BitMatrix a;
};

Canonical canonicalize(std::span<const Pauli> collection) {
    require_nonempty(collection);
    const std::size_t n = collection.front().num_qubits();
    IndependentBasis ib = independent_basis(collection);
    const std::size_t k = ib.k();
    Builder builder(n, ib.basis);
    Canonical out{n, k, ib, builder, BitMatrix(n, n)};
    if (k == 0) {
        return out;
    }
    Builder &b = out.builder;

    // Step 1: Hadamard every active qubit outside the greedy row basis of the X block.
    {
        BitMatrix xpart = ib.basis.block(n, 0, n, k);
        BitMatrix zpart = ib.basis.block(0, 0, n, k);
        std::vector<std::size_t> piv = independent_rows(xpart);
        std::vector<bool> is_pivot(n, false);
        for (std::size_t r : piv) {
            is_pivot[r] = true;
        }
        for (std::size_t q = 0; q < n; q++) {
            if (!is_pivot[q] && (!xpart.row_is_zero(q) || !zpart.row_is_zero(q))) {
                b.physical(Gate::h(q));
            }
        }
    }
    BitMatrix xpart = b.tracked().block(n, 0, n, k);
    std::vector<std::size_t> rows = independent_rows(xpart);
    if (rows.size() != k) {
        throw std::logic_error("synthesis: X block did not reach full rank after Hadamards");
    }
    std::vector<std::size_t> perm = rows;
    std::vector<bool> used(n, false);
    for (std::size_t r : rows) {
        used[r] = true;
    }
    for (std::size_t q = 0; q < n; q++) {
        if (!used[q]) {
            perm.push_back(q);
        }
    }
    b.set_perm(perm);

    // Logical-frame copy, then column transform so the X block reads [I_k; F].
    BitMatrix zl(n, k), xl(n, k);
    for (std::size_t l = 0; l < n; l++) {
        for (std::size_t c = 0; c < k; c++) {
            zl.set(l, c, b.tracked().get(perm[l], c));
            xl.set(l, c, b.tracked().get(n + perm[l], c));
        }
    }
    BitMatrix r1 = invert(xl.block(0, 0, k, k));
    BitMatrix s2 = BitMatrix::vstack(zl * r1, xl * r1);
    BitMatrix s3 = basis_extension(s2);
    // Right-multiplying by [[I, 0], [F, I]] turns the X block into I_n; Z becomes A.
    BitMatrix r3 = BitMatrix::identity(n);
    r3.set_block(k, 0, s2.block(n + k, 0, n - k, k));
    BitMatrix s4 = s3 * r3;
    out.a = s4.block(0, 0, n, n);
    if (s4.block(n, 0, n, n) != BitMatrix::identity(n) || !out.a.is_symmetric()) {
        throw std::logic_error("synthesis: completed stabilizer matrix is not in graph form");
    }
    return out;
}

/// Final Hadamards on every qubit still carrying X in a basis column, then the map.
SynthesisResult finish(Canonical &cx, std::span<const Pauli> collection, Construction construction) {
    Builder &b = cx.builder;
    const std::size_t n = cx.n;
    for (std::size_t q = 0; q < n; q++) {
        if (!b.tracked().row_is_zero(n + q)) {
            b.physical(Gate::h(q));
        }
    }
    if (!b.tracked().block(n, 0, n, cx.k).is_zero()) {
        throw std::logic_error("synthesis: basis is not diagonal at the end of the circuit");
    }
    b.circuit().cancel_hadamard_pairs();

    SynthesisResult res;
    res.circuit = b.circuit();
    res.k = cx.k;
    res.construction = construction;
    res.two_qubit_count = res.circuit.two_qubit_count();

    // Parity rows straight from the column chain: image of basis column i is Z^(column i of
    // the tracked Z block), and original j combines basis columns per the combination matrix.
    const std::size_t m = collection.size();
    BitMatrix zfinal = cx.k ? b.tracked().block(0, 0, n, cx.k) * cx.ib.combination : BitMatrix(n, m);
    MeasurementMap &map = res.map;
    map.qubit_relabeling = b.perm();
    map.parity = BitMatrix(m, n);
    for (std::size_t j = 0; j < m; j++) {
        for (std::size_t c = 0; c < n; c++) {
            map.parity.set(j, c, zfinal.get(map.qubit_relabeling[c], j));
        }
    }
    std::vector<Pauli> images;
    map.signs = track_signs(res.circuit, collection, &images);
    for (std::size_t j = 0; j < m; j++) {
        if (images[j].z() != map.physical_mask(j)) {
            throw std::logic_error("synthesis: parity chain disagrees with the conjugated image of operator " +
                                   std::to_string(j));
        }
    }
    return res;
}

/// A -> G^{-T} A G^{-1}: the effect of a CNOT network with X action G once the X block is
/// reset to the identity by a classical column transform.
void apply_cnot_network(BitMatrix &a, const BitMatrix &g) {
    BitMatrix gi = invert(g);
    a = gi.transposed() * a * gi;
}

/// Emits CNOTs realizing X action `g` on the first g.rows() logical qubits.
void emit_cnot_network(Builder &b, const BitMatrix &g) {
    RowOpList ops = pmh_reduce(g);
    // ops_p ... ops_1 g = I, so g = ops_1 ... ops_p and ops_p is applied first.
    const auto &list = ops.ops();
    for (auto it = list.rbegin(); it != list.rend(); ++it) {
        b.cnot(it->source, it->target);
    }
}

/// Phases on the diagonal of the leading block, then a CNOT network for its Cholesky factor.
void clear_leading_block(Builder &b, BitMatrix &a, std::size_t k) {
    const std::size_t n = a.rows();
    BitMatrix e = a.block(0, 0, k, k);
    if (e == BitMatrix::identity(k)) {
        return;
    }
    CholeskyResult chol = cholesky_gf2(e);
    for (std::size_t i = 0; i < k; i++) {
        if (chol.lambda_diag.get(i)) {
            b.s(i);
            a.flip(i, i);
        }
    }
    emit_cnot_network(b, chol.m);
    BitMatrix g = BitMatrix::identity(n);
    g.set_block(0, 0, chol.m);
    apply_cnot_network(a, g);
    if (a.block(0, 0, k, k) != BitMatrix::identity(k)) {
        throw std::logic_error("synthesis: Cholesky block did not reduce to the identity");
    }
}

}  // namespace

std::string construction_name(Construction c) {
    return c == Construction::CZ ? "cz" : "cnot";
}

ConstructionChoice parse_construction_choice(std::string_view name) {
    if (name == "cz") {
        return ConstructionChoice::CZ;
    }
    if (name == "cnot") {
        return ConstructionChoice::CNOT;
    }
    if (name == "best") {
        return ConstructionChoice::Best;
    }
    throw std::invalid_argument("unknown construction '" + std::string(name) + "' (expected cz, cnot or best)");
}

IndependentBasis independent_basis(std::span<const Pauli> collection) {
    require_nonempty(collection);
    BitMatrix s = to_symplectic(collection);
    if (!symplectic_check(s)) {
        require_commuting(collection);
    }
    RrefResult r = rref(s);
    IndependentBasis out;
    out.pivot_cols = r.pivot_cols;
    out.basis = s.select_cols(r.pivot_cols);
    out.combination = r.reduced.block(0, 0, r.rank(), s.cols());
    return out;
}

BitMatrix basis_extension(const BitMatrix &s2) {
    if (s2.rows() % 2 != 0) {
        throw std::invalid_argument("basis_extension: row count must be even");
    }
    const std::size_t n = s2.rows() / 2;
    const std::size_t k = s2.cols();
    if (k > n || s2.block(n, 0, k, k) != BitMatrix::identity(k)) {
        throw std::invalid_argument("basis_extension: X block does not start with the identity");
    }
    BitMatrix ext(2 * n, n - k);
    for (std::size_t e = 0; e < n - k; e++) {
        // Z on the first k qubits from row e of D, one X on qubit k + e.
        for (std::size_t i = 0; i < k; i++) {
            ext.set(i, e, s2.get(k + e, i));
        }
        ext.set(n + k + e, e, true);
    }
    return BitMatrix::hstack(s2, ext);
}

std::size_t cz_count_bound(std::size_t k, std::size_t n) {
    return k * n - k * (k + 1) / 2;
}

double cnot_count_bound(std::size_t k, std::size_t n) {
    return 2.0 * static_cast<double>(pmh_bound(k)) + block_reduce_bound(k, n);
}

SynthesisResult cz_construct(std::span<const Pauli> collection) {
    Canonical cx = canonicalize(collection);
    const std::size_t n = cx.n, k = cx.k;
    for (std::size_t i = 0; i < k; i++) {
        if (cx.a.get(i, i)) {
            cx.builder.s(i);
        }
    }
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (cx.a.get(i, j)) {
                cx.builder.cz(i, j);
            }
        }
    }
    return finish(cx, collection, Construction::CZ);
}

SynthesisResult cnot_construct(std::span<const Pauli> collection) {
    Canonical cx = canonicalize(collection);
    const std::size_t n = cx.n, k = cx.k;
    BitMatrix &a = cx.a;
    Builder &b = cx.builder;
    if (k > 0) {
        clear_leading_block(b, a, k);
        BitMatrix d = a.block(k, 0, n - k, k);
        if (!d.is_zero()) {
            for (std::size_t r = 0; r < n - k; r++) {
                if (!d.row_is_zero(r) && !a.get(k + r, k + r)) {
                    b.s(k + r);
                    a.flip(k + r, k + r);
                }
            }
            // X action [[I, 0], [D, I]], synthesized through its transpose.
            BitMatrix g = BitMatrix::identity(n);
            g.set_block(k, 0, d);
            RowOpList ops = block_reduce(g.transposed(), k);
            for (const RowOp &op : ops.ops()) {
                b.cnot(op.target, op.source);
            }
            apply_cnot_network(a, g);
            if (!a.block(k, 0, n - k, k).is_zero()) {
                throw std::logic_error("synthesis: block elimination left off-diagonal entries");
            }
            clear_leading_block(b, a, k);
        }
        for (std::size_t i = 0; i < n; i++) {
            if (a.get(i, i)) {
                b.s(i);
                a.flip(i, i);
            }
        }
        if (!a.is_zero()) {
            throw std::logic_error("synthesis: CNOT construction did not reach the all-X form");
        }
    }
    return finish(cx, collection, Construction::CNOT);
}

std::vector<int> track_signs(const CliffordCircuit &circuit, std::span<const Pauli> originals,
                             std::vector<Pauli> *images) {
    std::vector<int> signs;
    signs.reserve(originals.size());
    if (images) {
        images->clear();
    }
    for (std::size_t j = 0; j < originals.size(); j++) {
        PhasedPauli img = conjugate(circuit, PhasedPauli{originals[j], 0});
        if (!img.pauli.is_z_string()) {
            throw std::logic_error("track_signs: operator " + std::to_string(j) + " maps to " +
                                   img.pauli.sparse_str() + ", not a Z-string");
        }
        if (img.phase % 2 != 0) {
            throw std::logic_error("track_signs: operator " + std::to_string(j) + " picked up an imaginary phase");
        }
        signs.push_back(img.phase == 0 ? 1 : -1);
        if (images) {
            images->push_back(std::move(img.pauli));
        }
    }
    return signs;
}

PrunedCollection prune_local_qubits(std::span<const Pauli> collection) {
    require_nonempty(collection);
    const std::size_t n = collection.front().num_qubits();
    BitVector mask = qubitwise_commute_mask(collection);
    PrunedCollection out;
    out.prefix = CliffordCircuit(n);
    for (std::size_t q = 0; q < n; q++) {
        if (!mask.get(q)) {
            out.kept.push_back(q);
            continue;
        }
        out.pruned.push_back(q);
        PauliLetter letter = PauliLetter::I;
        for (const Pauli &p : collection) {
            if (p.letter(q) != PauliLetter::I) {
                letter = p.letter(q);
                break;
            }
        }
        if (letter == PauliLetter::Y) {
            out.prefix.s(q);
        }
        if (letter == PauliLetter::X || letter == PauliLetter::Y) {
            out.prefix.h(q);
        }
    }
    for (const Pauli &p : collection) {
        Pauli r(out.kept.size());
        for (std::size_t i = 0; i < out.kept.size(); i++) {
            r.set(i, p.letter(out.kept[i]));
        }
        out.reduced.push_back(std::move(r));
    }
    return out;
}

SynthesisResult synthesize(std::span<const Pauli> collection, ConstructionChoice choice) {
    require_nonempty(collection);
    require_commuting(collection);
    const std::size_t n = collection.front().num_qubits();
    PrunedCollection pc = prune_local_qubits(collection);

    SynthesisResult inner;
    inner.construction = choice == ConstructionChoice::CNOT ? Construction::CNOT : Construction::CZ;
    if (!pc.kept.empty()) {
        if (choice == ConstructionChoice::CZ) {
            inner = cz_construct(pc.reduced);
        } else if (choice == ConstructionChoice::CNOT) {
            inner = cnot_construct(pc.reduced);
        } else {
            SynthesisResult a = cz_construct(pc.reduced);
            SynthesisResult c = cnot_construct(pc.reduced);
            inner = c.two_qubit_count < a.two_qubit_count ? std::move(c) : std::move(a);
        }
    } else {
        inner.map.qubit_relabeling = {};
    }

    SynthesisResult res;
    res.construction = inner.construction;
    res.circuit = pc.prefix;
    for (const Gate &g : inner.circuit.gates()) {
        Gate e = g;
        e.q0 = pc.kept[g.q0];
        e.q1 = pc.kept[g.q1];
        res.circuit.push(e);
    }
    res.two_qubit_count = res.circuit.two_qubit_count();
    res.k = rank(to_symplectic(collection));

    MeasurementMap &map = res.map;
    for (std::size_t c : inner.map.qubit_relabeling) {
        map.qubit_relabeling.push_back(pc.kept[c]);
    }
    map.qubit_relabeling.insert(map.qubit_relabeling.end(), pc.pruned.begin(), pc.pruned.end());
    std::vector<Pauli> images;
    map.signs = track_signs(res.circuit, collection, &images);
    map.parity = BitMatrix(collection.size(), n);
    for (std::size_t j = 0; j < collection.size(); j++) {
        for (std::size_t c = 0; c < n; c++) {
            map.parity.set(j, c, images[j].z(map.qubit_relabeling[c]));
        }
    }
    return res;
}

SynthesisResult synthesize_best(std::span<const Pauli> collection) {
    return synthesize(collection, ConstructionChoice::Best);
}

}  // namespace paulimeas
