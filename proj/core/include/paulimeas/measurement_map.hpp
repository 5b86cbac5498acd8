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
#include <string>
#include <string_view>
#include <vector>

#include "paulimeas/bit_matrix.hpp"

namespace paulimeas {

/// Classical post-processing for one collection.
///
/// Row j of `parity` selects logical qubits; logical qubit c is read from physical qubit
/// qubit_relabeling[c]. The estimate of original Pauli j from one shot is
/// signs[j] * (-1)^(sum of the selected outcome bits).
struct MeasurementMap {
    BitMatrix parity;
    std::vector<int> signs;
    std::vector<std::size_t> qubit_relabeling;

    std::size_t num_qubits() const noexcept {
        return qubit_relabeling.size();
    }
    std::size_t size() const noexcept {
        return signs.size();
    }
    /// Row j of the parity matrix expressed on physical qubits.
    BitVector physical_mask(std::size_t j) const;
    /// Throws std::invalid_argument if shapes disagree, a sign is not +-1 or the relabeling
    /// is not a permutation.
    void validate() const;

    bool operator==(const MeasurementMap &) const = default;
};

/// {"schema": "paulimeas.map/1", "num_qubits": n, "parity": ["0110", ...], "signs": [...],
///  "qubit_relabeling": [...]}; parity strings list logical qubit 0 first.
std::string map_to_json(const MeasurementMap &map);
MeasurementMap map_from_json(std::string_view text);

}  // namespace paulimeas
