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

#include "paulimeas/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace paulimeas {

namespace {

/// Contiguous z/x words for fast repeated commutation checks.
class PackedPaulis {
   public:
    explicit PackedPaulis(std::span<const Pauli> paulis)
        : words_(paulis.empty() ? 0 : paulis.front().z().words().size()), data_(paulis.size() * 2 * words_) {
        for (std::size_t i = 0; i < paulis.size(); i++) {
            std::copy_n(paulis[i].z().words().begin(), words_, data_.begin() + static_cast<std::ptrdiff_t>(2 * i * words_));
            std::copy_n(paulis[i].x().words().begin(), words_,
                        data_.begin() + static_cast<std::ptrdiff_t>((2 * i + 1) * words_));
        }
    }

    explicit PackedPaulis(std::span<const PauliTerm> terms)
        : words_(terms.empty() ? 0 : terms.front().pauli.z().words().size()), data_(terms.size() * 2 * words_) {
        for (std::size_t i = 0; i < terms.size(); i++) {
            std::copy_n(terms[i].pauli.z().words().begin(), words_,
                        data_.begin() + static_cast<std::ptrdiff_t>(2 * i * words_));
            std::copy_n(terms[i].pauli.x().words().begin(), words_,
                        data_.begin() + static_cast<std::ptrdiff_t>((2 * i + 1) * words_));
        }
    }

    bool commutes(std::size_t a, std::size_t b) const noexcept {
        const std::uint64_t *za = &data_[2 * a * words_];
        const std::uint64_t *xa = za + words_;
        const std::uint64_t *zb = &data_[2 * b * words_];
        const std::uint64_t *xb = zb + words_;
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_; w++) {
            acc ^= (za[w] & xb[w]) ^ (xa[w] & zb[w]);
        }
        return (std::popcount(acc) & 1) == 0;
    }

   private:
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

std::vector<std::size_t> degrees(const BitMatrix &adj) {
    std::vector<std::size_t> deg(adj.rows());
    for (std::size_t v = 0; v < adj.rows(); v++) {
        std::size_t c = 0;
        for (std::uint64_t w : adj.row(v)) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        deg[v] = c;
    }
    return deg;
}

template <typename F>
void for_each_neighbor(const BitMatrix &adj, std::size_t v, F &&f) {
    auto row = adj.row(v);
    for (std::size_t w = 0; w < row.size(); w++) {
        std::uint64_t bits = row[w];
        while (bits) {
            f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

std::size_t smallest_free_colour(const BitMatrix &adj, std::size_t v, const std::vector<std::ptrdiff_t> &colour,
                                 std::vector<char> &scratch) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for_each_neighbor(adj, v, [&](std::size_t u) {
        if (colour[u] >= 0 && static_cast<std::size_t>(colour[u]) < scratch.size()) {
            scratch[static_cast<std::size_t>(colour[u])] = 1;
        }
    });
    std::size_t c = 0;
    while (c < scratch.size() && scratch[c]) {
        c++;
    }
    return c;
}

std::vector<std::size_t> order_largest_first(const BitMatrix &adj) {
    std::vector<std::size_t> deg = degrees(adj);
    std::vector<std::size_t> order(adj.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    return order;
}

std::vector<std::size_t> order_connected_dfs(const BitMatrix &adj) {
    const std::size_t t = adj.rows();
    std::vector<bool> seen(t, false);
    std::vector<std::size_t> order;
    order.reserve(t);
    // Iterative DFS with an explicit neighbour cursor so the preorder matches recursive DFS.
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < t; root++) {
        if (seen[root]) {
            continue;
        }
        seen[root] = true;
        order.push_back(root);
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto &[v, cursor] = stack.back();
            std::size_t next = t;
            for (std::size_t u = cursor; u < t; u++) {
                if (adj.get(v, u) && !seen[u]) {
                    next = u;
                    break;
                }
            }
            if (next == t) {
                stack.pop_back();
                continue;
            }
            cursor = next + 1;
            seen[next] = true;
            order.push_back(next);
            stack.emplace_back(next, 0);
        }
    }
    return order;
}

std::vector<std::size_t> order_independent_set(const BitMatrix &adj) {
    const std::size_t t = adj.rows();
    std::vector<bool> remaining(t, true);
    std::size_t left = t;
    std::vector<std::size_t> order;
    order.reserve(t);
    std::vector<std::size_t> deg(t);
    std::vector<bool> live(t);
    while (left > 0) {
        // One greedy maximal independent set of the remaining subgraph.
        live = remaining;
        for (std::size_t v = 0; v < t; v++) {
            if (!live[v]) {
                continue;
            }
            std::size_t d = 0;
            for_each_neighbor(adj, v, [&](std::size_t u) { d += live[u] ? 1 : 0; });
            deg[v] = d;
        }
        std::vector<std::size_t> chosen;
        while (true) {
            std::size_t best = t;
            for (std::size_t v = 0; v < t; v++) {
                if (live[v] && (best == t || deg[v] < deg[best])) {
                    best = v;
                }
            }
            if (best == t) {
                break;
            }
            chosen.push_back(best);
            std::vector<std::size_t> removed{best};
            for_each_neighbor(adj, best, [&](std::size_t u) {
                if (live[u]) {
                    removed.push_back(u);
                }
            });
            for (std::size_t u : removed) {
                live[u] = false;
            }
            for (std::size_t u : removed) {
                for_each_neighbor(adj, u, [&](std::size_t w) {
                    if (live[w]) {
                        deg[w]--;
                    }
                });
            }
        }
        std::sort(chosen.begin(), chosen.end());
        for (std::size_t v : chosen) {
            remaining[v] = false;
            order.push_back(v);
        }
        left -= chosen.size();
    }
    return order;
}

std::vector<std::ptrdiff_t> colour_dsatur(const BitMatrix &adj) {
    const std::size_t t = adj.rows();
    std::vector<std::size_t> deg = degrees(adj);
    std::vector<std::ptrdiff_t> colour(t, -1);
    std::vector<std::vector<char>> neighbour_colours(t);
    std::vector<std::size_t> saturation(t, 0);
    std::vector<char> scratch(t + 1);
    for (std::size_t step = 0; step < t; step++) {
        std::size_t best = t;
        for (std::size_t v = 0; v < t; v++) {
            if (colour[v] >= 0) {
                continue;
            }
            if (best == t || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && deg[v] > deg[best])) {
                best = v;
            }
        }
        std::size_t c = smallest_free_colour(adj, best, colour, scratch);
        colour[best] = static_cast<std::ptrdiff_t>(c);
        for_each_neighbor(adj, best, [&](std::size_t u) {
            auto &seen = neighbour_colours[u];
            if (seen.size() <= c) {
                seen.resize(c + 1, 0);
            }
            if (!seen[c]) {
                seen[c] = 1;
                saturation[u]++;
            }
        });
    }
    return colour;
}

}  // namespace

void validate_arrangement(const WeightedPauliSum &op, const Arrangement &arr) {
    std::vector<bool> seen(op.size(), false);
    std::size_t count = 0;
    for (std::size_t c = 0; c < arr.size(); c++) {
        const auto &col = arr.collections[c];
        if (col.empty()) {
            throw std::invalid_argument("collection " + std::to_string(c) + " is empty");
        }
        for (std::size_t idx : col) {
            if (idx >= op.size()) {
                throw std::invalid_argument("collection " + std::to_string(c) + " references term " +
                                            std::to_string(idx) + " but the operator has " +
                                            std::to_string(op.size()) + " terms");
            }
            if (seen[idx]) {
                throw std::invalid_argument("term " + std::to_string(idx) + " appears more than once");
            }
            seen[idx] = true;
            count++;
        }
        for (std::size_t a = 0; a < col.size(); a++) {
            for (std::size_t b = a + 1; b < col.size(); b++) {
                if (!commutes(op[col[a]].pauli, op[col[b]].pauli)) {
                    throw NonCommutingError(col[a], col[b],
                                            "collection " + std::to_string(c) + ": terms " + std::to_string(col[a]) +
                                                " (" + op[col[a]].pauli.sparse_str() + ") and " +
                                                std::to_string(col[b]) + " (" + op[col[b]].pauli.sparse_str() +
                                                ") do not commute");
                }
            }
        }
    }
    if (count != op.size()) {
        throw std::invalid_argument("arrangement covers " + std::to_string(count) + " of " +
                                    std::to_string(op.size()) + " terms");
    }
}

Arrangement singleton_arrangement(const WeightedPauliSum &op) {
    Arrangement arr;
    for (std::size_t i = 0; i < op.size(); i++) {
        arr.collections.push_back({i});
    }
    return arr;
}

Arrangement sorted_insertion(const WeightedPauliSum &op) {
    PackedPaulis packed(op.terms());
    std::vector<std::size_t> order(op.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(op[a].coeff) > std::abs(op[b].coeff); });
    Arrangement arr;
    for (std::size_t term : order) {
        bool placed = false;
        for (auto &col : arr.collections) {
            bool ok = std::all_of(col.begin(), col.end(), [&](std::size_t other) { return packed.commutes(term, other); });
            if (ok) {
                col.push_back(term);
                placed = true;
                break;
            }
        }
        if (!placed) {
            arr.collections.push_back({term});
        }
    }
    return arr;
}

ColouringStrategy parse_colouring_strategy(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    if (s == "largest_first") {
        return ColouringStrategy::LargestFirst;
    }
    if (s == "connected_sequential_dfs" || s == "connected_sequential") {
        return ColouringStrategy::ConnectedSequentialDfs;
    }
    if (s == "dsatur" || s == "saturation_largest_first") {
        return ColouringStrategy::Dsatur;
    }
    if (s == "independent_set") {
        return ColouringStrategy::IndependentSet;
    }
    throw std::invalid_argument("unknown colouring strategy '" + std::string(name) + "'");
}

std::string strategy_name(ColouringStrategy s) {
    switch (s) {
        case ColouringStrategy::LargestFirst:
            return "largest_first";
        case ColouringStrategy::ConnectedSequentialDfs:
            return "connected_sequential_dfs";
        case ColouringStrategy::Dsatur:
            return "dsatur";
        case ColouringStrategy::IndependentSet:
            return "independent_set";
    }
    return "?";
}

BitMatrix anticommutation_graph(std::span<const Pauli> paulis) {
    PackedPaulis packed(paulis);
    const std::size_t t = paulis.size();
    BitMatrix adj(t, t);
    for (std::size_t a = 0; a < t; a++) {
        for (std::size_t b = a + 1; b < t; b++) {
            if (!packed.commutes(a, b)) {
                adj.set(a, b, true);
                adj.set(b, a, true);
            }
        }
    }
    return adj;
}

std::vector<std::size_t> greedy_colouring(const BitMatrix &adjacency, ColouringStrategy strategy) {
    const std::size_t t = adjacency.rows();
    std::vector<std::ptrdiff_t> colour;
    if (strategy == ColouringStrategy::Dsatur) {
        colour = colour_dsatur(adjacency);
    } else {
        std::vector<std::size_t> order;
        switch (strategy) {
            case ColouringStrategy::LargestFirst:
                order = order_largest_first(adjacency);
                break;
            case ColouringStrategy::ConnectedSequentialDfs:
                order = order_connected_dfs(adjacency);
                break;
            default:
                order = order_independent_set(adjacency);
                break;
        }
        colour.assign(t, -1);
        std::vector<char> scratch(t + 1);
        for (std::size_t v : order) {
            colour[v] = static_cast<std::ptrdiff_t>(smallest_free_colour(adjacency, v, colour, scratch));
        }
    }
    return std::vector<std::size_t>(colour.begin(), colour.end());
}

Arrangement greedy_colour(const WeightedPauliSum &op, ColouringStrategy strategy) {
    std::vector<Pauli> paulis = op.paulis();
    std::vector<std::size_t> colour = greedy_colouring(anticommutation_graph(paulis), strategy);
    std::size_t n_colours = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    Arrangement arr;
    arr.collections.resize(n_colours);
    for (std::size_t v = 0; v < colour.size(); v++) {
        arr.collections[colour[v]].push_back(v);
    }
    return arr;
}

Arrangement merge_collections(const WeightedPauliSum &op, const Arrangement &arr, std::size_t i, std::size_t j) {
    if (i >= arr.size() || j >= arr.size() || i == j) {
        throw std::invalid_argument("merge_collections: need two distinct collection indices in range");
    }
    for (std::size_t a : arr.collections[i]) {
        for (std::size_t b : arr.collections[j]) {
            if (!commutes(op[a].pauli, op[b].pauli)) {
                throw NonCommutingError(a, b,
                                        "cannot merge: terms " + std::to_string(a) + " (" + op[a].pauli.sparse_str() +
                                            ") and " + std::to_string(b) + " (" + op[b].pauli.sparse_str() +
                                            ") do not commute");
            }
        }
    }
    std::size_t keep = std::min(i, j), drop = std::max(i, j);
    Arrangement out = arr;
    auto &merged = out.collections[keep];
    merged.insert(merged.end(), arr.collections[drop].begin(), arr.collections[drop].end());
    std::sort(merged.begin(), merged.end());
    out.collections.erase(out.collections.begin() + static_cast<std::ptrdiff_t>(drop));
    return out;
}

}  // namespace paulimeas
