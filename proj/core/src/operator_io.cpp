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

#include "paulimeas/operator_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace paulimeas {

namespace {

struct RawTerm {
    double coeff;
    std::vector<std::pair<PauliLetter, std::size_t>> letters;
    std::size_t line;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            i++;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            j++;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

double parse_coeff(std::string_view s, std::size_t line) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
        throw ParseError(line, "bad coefficient '" + std::string(s) + "'");
    }
    if (!std::isfinite(v)) {
        throw ParseError(line, "non-finite coefficient '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::pair<PauliLetter, std::size_t>> parse_letters(const std::vector<std::string_view> &tokens,
                                                                std::size_t first, std::size_t line) {
    std::vector<std::pair<PauliLetter, std::size_t>> out;
    for (std::size_t t = first; t < tokens.size(); t++) {
        std::string_view tok = tokens[t];
        PauliLetter letter;
        try {
            letter = letter_from_char(tok.front());
        } catch (const std::invalid_argument &) {
            throw ParseError(line, "bad Pauli factor '" + std::string(tok) + "'");
        }
        if (tok.size() == 1) {
            if (letter != PauliLetter::I) {
                throw ParseError(line, "missing qubit index in '" + std::string(tok) + "'");
            }
            continue;
        }
        auto q = parse_count(tok.substr(1));
        if (!q) {
            throw ParseError(line, "bad qubit index in '" + std::string(tok) + "'");
        }
        if (letter == PauliLetter::I) {
            continue;
        }
        for (const auto &[l, seen] : out) {
            if (seen == *q) {
                throw ParseError(line, "qubit " + std::to_string(*q) + " appears twice");
            }
        }
        out.emplace_back(letter, *q);
    }
    return out;
}

WeightedPauliSum build(std::optional<std::size_t> declared, const std::vector<RawTerm> &raw) {
    std::size_t needed = 0;
    for (const RawTerm &t : raw) {
        for (const auto &[l, q] : t.letters) {
            if (declared && q >= *declared) {
                throw ParseError(t.line, "qubit index " + std::to_string(q) + " is out of range for " +
                                             std::to_string(*declared) + " qubits");
            }
            needed = std::max(needed, q + 1);
        }
    }
    std::size_t n = declared ? *declared : std::max<std::size_t>(needed, 1);
    if (n == 0) {
        throw ParseError(0, "qubit count must be at least 1");
    }
    std::vector<PauliTerm> terms;
    terms.reserve(raw.size());
    for (const RawTerm &t : raw) {
        Pauli p(n);
        for (const auto &[l, q] : t.letters) {
            p.set(q, l);
        }
        terms.push_back({t.coeff, std::move(p)});
    }
    return WeightedPauliSum(n, terms);
}

WeightedPauliSum parse_line_format(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<RawTerm> raw;
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::size_t piece_start = 0;
        while (piece_start <= line.size()) {
            std::size_t semi = line.find(';', piece_start);
            std::string_view piece =
                trim(line.substr(piece_start, semi == std::string_view::npos ? std::string_view::npos : semi - piece_start));
            if (!piece.empty()) {
                std::vector<std::string_view> tokens = split_ws(piece);
                std::string lowered;
                for (char c : tokens.back()) {
                    lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                }
                bool header_colon = tokens.front() == "qubits:" || tokens.front() == "n_qubits:";
                if (header_colon || lowered == "qubits" || lowered == "qubit") {
                    if (tokens.size() != 2 || !raw.empty() || declared) {
                        throw ParseError(line_no, "malformed or misplaced qubit-count header");
                    }
                    auto n = parse_count(header_colon ? tokens[1] : tokens[0]);
                    if (!n || *n == 0) {
                        throw ParseError(line_no, "bad qubit count");
                    }
                    declared = n;
                } else {
                    double c = parse_coeff(tokens.front(), line_no);
                    raw.push_back({c, parse_letters(tokens, 1, line_no), line_no});
                }
            }
            if (semi == std::string_view::npos) {
                break;
            }
            piece_start = semi + 1;
        }
        if (nl == std::string_view::npos) {
            break;
        }
        start = nl + 1;
        line_no++;
    }
    return build(declared, raw);
}

WeightedPauliSum parse_json_format(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError(0, "JSON operator needs a 'terms' array");
    }
    std::optional<std::size_t> declared;
    if (doc.contains("n_qubits")) {
        if (!doc["n_qubits"].is_number_unsigned() || doc["n_qubits"].get<std::size_t>() == 0) {
            throw ParseError(0, "'n_qubits' must be a positive integer");
        }
        declared = doc["n_qubits"].get<std::size_t>();
    }
    std::vector<RawTerm> raw;
    std::size_t index = 0;
    for (const auto &term : doc["terms"]) {
        index++;
        if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_number() || !term.contains("pauli") ||
            !term["pauli"].is_string()) {
            throw ParseError(index, "term needs a numeric 'coeff' and a string 'pauli'");
        }
        double c = term["coeff"].get<double>();
        if (!std::isfinite(c)) {
            throw ParseError(index, "non-finite coefficient");
        }
        std::string pauli = term["pauli"].get<std::string>();
        std::vector<std::string_view> tokens = split_ws(pauli);
        raw.push_back({c, parse_letters(tokens, 0, index), index});
    }
    return build(declared, raw);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {
}

WeightedPauliSum parse_operator(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        return parse_json_format(body);
    }
    return parse_line_format(text);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightedPauliSum read_operator_file(const std::string &path) {
    return parse_operator(read_text_file(path));
}

std::string format_operator(const WeightedPauliSum &op) {
    std::string out = "qubits: " + std::to_string(op.num_qubits()) + "\n";
    if (op.identity_offset() != 0.0) {
        out += format_double(op.identity_offset()) + " I\n";
    }
    for (const PauliTerm &t : op.terms()) {
        out += format_double(t.coeff) + " " + t.pauli.sparse_str() + "\n";
    }
    return out;
}

std::string format_operator_json(const WeightedPauliSum &op) {
    nlohmann::json doc;
    doc["n_qubits"] = op.num_qubits();
    doc["terms"] = nlohmann::json::array();
    if (op.identity_offset() != 0.0) {
        doc["terms"].push_back({{"coeff", op.identity_offset()}, {"pauli", ""}});
    }
    for (const PauliTerm &t : op.terms()) {
        doc["terms"].push_back({{"coeff", t.coeff}, {"pauli", t.pauli.sparse_str()}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace paulimeas
