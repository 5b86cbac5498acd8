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

#include "artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "paulimeas/operator_io.hpp"

namespace paulimeas::cli {

namespace {

constexpr const char *kArrangementSchema = "paulimeas.arrangement/1";

using nlohmann::json;

}  // namespace

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string arrangement_to_json(const ArrangementFile &file) {
    json j;
    j["schema"] = kArrangementSchema;
    j["num_qubits"] = file.num_qubits;
    j["num_terms"] = file.num_terms;
    j["strategy"] = file.strategy;
    j["input_digest"] = file.input_digest;
    j["collections"] = json::array();
    for (const auto &c : file.arrangement.collections) {
        j["collections"].push_back(c);
    }
    return j.dump(2) + "\n";
}

ArrangementFile arrangement_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(0, std::string("arrangement: ") + e.what());
    }
    try {
        if (j.value("schema", "") != kArrangementSchema) {
            throw ParseError(0, "arrangement: expected schema " + std::string(kArrangementSchema));
        }
        ArrangementFile f;
        f.num_qubits = j.at("num_qubits").get<std::size_t>();
        f.num_terms = j.at("num_terms").get<std::size_t>();
        f.strategy = j.value("strategy", "");
        f.input_digest = j.value("input_digest", "");
        for (const auto &c : j.at("collections")) {
            f.arrangement.collections.push_back(c.get<std::vector<std::size_t>>());
        }
        return f;
    } catch (const json::exception &e) {
        throw ParseError(0, std::string("arrangement: ") + e.what());
    }
}

StateVector parse_state(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    std::vector<Amplitude> amps;
    if (first != std::string_view::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ParseError(0, std::string("state: ") + e.what());
        }
        if (j.contains("basis")) {
            std::string bits = j["basis"].get<std::string>();
            std::size_t idx = 0;
            for (std::size_t q = 0; q < bits.size(); q++) {
                if (bits[q] != '0' && bits[q] != '1') {
                    throw ParseError(0, "state: basis string must contain only 0 and 1");
                }
                if (bits[q] == '1') {
                    idx |= std::size_t{1} << q;
                }
            }
            if (bits.empty() || bits.size() > kMaxSimQubits) {
                throw ParseError(0, "state: basis string length out of range");
            }
            return StateVector::basis(bits.size(), idx);
        }
        try {
            for (const auto &a : j.at("amplitudes")) {
                amps.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
            }
        } catch (const json::exception &e) {
            throw ParseError(0, std::string("state: ") + e.what());
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            lineno++;
            auto hash = line.find('#');
            if (hash != std::string::npos) {
                line.erase(hash);
            }
            std::istringstream ls(line);
            double re, im;
            if (!(ls >> re)) {
                continue;
            }
            if (!(ls >> im)) {
                im = 0.0;
            }
            std::string extra;
            if (ls >> extra) {
                throw ParseError(lineno, "state: expected 're im'");
            }
            amps.emplace_back(re, im);
        }
    }
    try {
        return StateVector::from_amplitudes(std::move(amps));
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, std::string("state: ") + e.what());
    }
}

std::string circuit_file_name(std::size_t collection) {
    return "collection_" + std::to_string(collection) + ".qasm";
}

std::string map_file_name(std::size_t collection) {
    return "collection_" + std::to_string(collection) + ".map.json";
}

}  // namespace paulimeas::cli
