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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "paulimeas/grouping.hpp"
#include "paulimeas/statevector.hpp"

namespace paulimeas::cli {

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

struct ArrangementFile {
    Arrangement arrangement;
    std::size_t num_qubits = 0;
    std::size_t num_terms = 0;
    std::string strategy;
    std::string input_digest;
};

std::string arrangement_to_json(const ArrangementFile &file);
/// Throws ParseError on malformed text; the arrangement itself is not validated here.
ArrangementFile arrangement_from_json(std::string_view text);

/// A state is given either as {"basis": "01"} (character q is qubit q), as
/// {"amplitudes": [[re, im], ...]}, or as plain text with one "re im" pair per line.
StateVector parse_state(std::string_view text);

/// Names of the per-collection artifacts written by synth and read by verify.
std::string circuit_file_name(std::size_t collection);
std::string map_file_name(std::size_t collection);

}  // namespace paulimeas::cli
