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
#include <string>
#include <string_view>

#include "paulimeas/pauli.hpp"

namespace paulimeas {

/// Parse failure. line() is 1-based; 0 when the failure is not tied to one line.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &message);
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

/// Accepts the line format
///     qubits: 3            (or "3 qubits"; optional)
///     -0.5 X0 Z2           # comment
///     0.25 I               (identity, goes to the offset)
/// where ';' also separates lines, or a JSON object
///     {"n_qubits": 3, "terms": [{"coeff": -0.5, "pauli": "X0 Z2"}, ...]}.
WeightedPauliSum parse_operator(std::string_view text);
WeightedPauliSum read_operator_file(const std::string &path);

/// Line format with a qubits header; coefficients printed with 17 significant digits so
/// that parsing the result gives back an identical sum.
std::string format_operator(const WeightedPauliSum &op);
std::string format_operator_json(const WeightedPauliSum &op);

/// Reads a whole file, throwing std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string &path);

}  // namespace paulimeas
