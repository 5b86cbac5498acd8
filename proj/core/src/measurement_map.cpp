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

#include "paulimeas/measurement_map.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>
#include "paulimeas/operator_io.hpp"

namespace paulimeas {

BitVector MeasurementMap::physical_mask(std::size_t j) const {
    BitVector mask(num_qubits());
    for (std::size_t c = 0; c < num_qubits(); c++) {
        if (parity.get(j, c)) {
            mask.set(qubit_relabeling[c], true);
        }
    }
    return mask;
}

void MeasurementMap::validate() const {
    const std::size_t n = qubit_relabeling.size();
    if (parity.rows() != signs.size() || (parity.rows() > 0 && parity.cols() != n)) {
        throw std::invalid_argument("measurement map: parity matrix shape does not match signs/relabeling");
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("measurement map: sign " + std::to_string(s) + " is not +1 or -1");
        }
    }
    std::vector<bool> seen(n, false);
    for (std::size_t q : qubit_relabeling) {
        if (q >= n || seen[q]) {
            throw std::invalid_argument("measurement map: qubit relabeling is not a permutation");
        }
        seen[q] = true;
    }
}

std::string map_to_json(const MeasurementMap &map) {
    nlohmann::json doc;
    doc["schema"] = "paulimeas.map/1";
    doc["num_qubits"] = map.num_qubits();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t j = 0; j < map.size(); j++) {
        std::string bits(map.num_qubits(), '0');
        for (std::size_t c = 0; c < map.num_qubits(); c++) {
            bits[c] = map.parity.get(j, c) ? '1' : '0';
        }
        rows.push_back(bits);
    }
    doc["parity"] = rows;
    doc["signs"] = map.signs;
    doc["qubit_relabeling"] = map.qubit_relabeling;
    return doc.dump(2) + "\n";
}

MeasurementMap map_from_json(std::string_view text) {
    MeasurementMap map;
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        if (doc.value("schema", "") != "paulimeas.map/1") {
            throw ParseError(0, "measurement map: missing or unknown schema");
        }
        const std::size_t n = doc.at("num_qubits").get<std::size_t>();
        map.signs = doc.at("signs").get<std::vector<int>>();
        map.qubit_relabeling = doc.at("qubit_relabeling").get<std::vector<std::size_t>>();
        const auto rows = doc.at("parity").get<std::vector<std::string>>();
        map.parity = BitMatrix(rows.size(), n);
        for (std::size_t j = 0; j < rows.size(); j++) {
            if (rows[j].size() != n) {
                throw ParseError(j + 1, "measurement map: parity row has the wrong length");
            }
            for (std::size_t c = 0; c < n; c++) {
                if (rows[j][c] != '0' && rows[j][c] != '1') {
                    throw ParseError(j + 1, "measurement map: parity rows must be 0/1 strings");
                }
                map.parity.set(j, c, rows[j][c] == '1');
            }
        }
        if (map.qubit_relabeling.size() != n) {
            throw ParseError(0, "measurement map: relabeling length differs from num_qubits");
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("measurement map: ") + e.what());
    }
    try {
        map.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
    return map;
}

}  // namespace paulimeas
