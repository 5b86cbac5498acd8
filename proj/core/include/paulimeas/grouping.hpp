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
#include "paulimeas/pauli.hpp"

namespace paulimeas {

/// Collections of term indices into a WeightedPauliSum.
struct Arrangement {
    std::vector<std::vector<std::size_t>> collections;

    std::size_t size() const noexcept {
        return collections.size();
    }
    bool operator==(const Arrangement &) const = default;
};

/// Checks the partition property and pairwise commutation inside each collection.
/// Throws std::invalid_argument for partition problems and NonCommutingError (with term
/// indices) for an anticommuting pair.
void validate_arrangement(const WeightedPauliSum &op, const Arrangement &arr);

/// Every term on its own.
Arrangement singleton_arrangement(const WeightedPauliSum &op);

/// Greedy grouping in order of decreasing |coeff| (stable for ties); each term joins the
/// first collection, in creation order, whose members all commute with it.
Arrangement sorted_insertion(const WeightedPauliSum &op);

enum class ColouringStrategy { LargestFirst, ConnectedSequentialDfs, Dsatur, IndependentSet };

/// Accepts "largest_first", "connected_sequential_dfs", "dsatur", "independent_set" and the
/// dashed spellings used by the command line ("largest-first", "connected-sequential", ...).
ColouringStrategy parse_colouring_strategy(std::string_view name);
std::string strategy_name(ColouringStrategy s);

/// Adjacency matrix of the anticommutation graph (edge iff the Paulis do not commute).
BitMatrix anticommutation_graph(std::span<const Pauli> paulis);

/// Node colouring in the style of networkx.greedy_color; colour c is returned as collections[c].
std::vector<std::size_t> greedy_colouring(const BitMatrix &adjacency, ColouringStrategy strategy);
Arrangement greedy_colour(const WeightedPauliSum &op, ColouringStrategy strategy);

/// Replaces collections i and j by their union (placed at min(i, j), members sorted).
/// Throws NonCommutingError carrying the term indices of a witness pair.
Arrangement merge_collections(const WeightedPauliSum &op, const Arrangement &arr, std::size_t i, std::size_t j);

}  // namespace paulimeas
