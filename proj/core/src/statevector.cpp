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

#include "paulimeas/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace paulimeas {

namespace {

void check_cap(std::size_t n) {
    if (n > kMaxSimQubits) {
        throw std::invalid_argument("statevector simulation is capped at " + std::to_string(kMaxSimQubits) +
                                    " qubits, got " + std::to_string(n));
    }
}

std::uint64_t mask_word(const BitVector &bits) {
    return bits.size() == 0 ? 0 : bits.words()[0];
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_cap(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, 0.0);
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dimension()) {
        throw std::out_of_range("basis state index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector s;
    s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    check_cap(s.num_qubits_);
    s.amps_ = std::move(amplitudes);
    s.require_normalized();
    return s;
}

double StateVector::norm() const {
    double acc = 0;
    for (const Amplitude &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void StateVector::require_normalized(double tol) const {
    double nrm = norm();
    if (std::abs(nrm - 1.0) > tol) {
        throw std::invalid_argument("state is not normalized (norm " + std::to_string(nrm) + ")");
    }
}

void apply_gate(const Gate &g, StateVector &state) {
    const std::size_t dim = state.dimension();
    if (g.q0 >= state.num_qubits() || (g.two_qubit() && g.q1 >= state.num_qubits())) {
        throw std::out_of_range("gate " + gate_str(g) + " outside the state");
    }
    const std::size_t a = std::size_t{1} << g.q0;
    const std::size_t b = std::size_t{1} << g.q1;
    constexpr double r = 0.70710678118654752440;
    switch (g.kind) {
        case GateKind::H:
            for (std::size_t i = 0; i < dim; i++) {
                if (!(i & a)) {
                    Amplitude u = state[i], v = state[i | a];
                    state[i] = r * (u + v);
                    state[i | a] = r * (u - v);
                }
            }
            break;
        case GateKind::S:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & a) {
                    state[i] *= Amplitude(0.0, 1.0);
                }
            }
            break;
        case GateKind::CZ:
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & a) && (i & b)) {
                    state[i] = -state[i];
                }
            }
            break;
        case GateKind::CNOT:
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & a) && !(i & b)) {
                    std::swap(state[i], state[i | b]);
                }
            }
            break;
    }
}

StateVector apply_circuit(const CliffordCircuit &circuit, StateVector state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit and state widths differ");
    }
    for (const Gate &g : circuit.gates()) {
        apply_gate(g, state);
    }
    return state;
}

Amplitude expectation_complex(const Pauli &p, const StateVector &state) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("Pauli and state widths differ");
    }
    check_cap(p.num_qubits());
    const std::uint64_t x = mask_word(p.x());
    const std::uint64_t z = mask_word(p.z());
    // P|b> = i^{#Y} (-1)^{z.b} |b ^ x>
    static const Amplitude i_pow[4] = {1.0, Amplitude(0, 1), -1.0, Amplitude(0, -1)};
    const Amplitude global = i_pow[std::popcount(x & z) & 3];
    Amplitude acc = 0.0;
    for (std::size_t b = 0; b < state.dimension(); b++) {
        Amplitude term = std::conj(state[b ^ x]) * state[b];
        acc += (std::popcount(z & b) & 1) ? -term : term;
    }
    return global * acc;
}

double expectation(const Pauli &p, const StateVector &state) {
    return expectation_complex(p, state).real();
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> out(state.dimension());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = std::norm(state[i]);
    }
    return out;
}

BitVector ShotRecord::bitstring(std::size_t shot) const {
    BitVector v(num_qubits);
    for (std::size_t q = 0; q < num_qubits; q++) {
        v.set(q, (outcomes[shot] >> q) & 1U);
    }
    return v;
}

std::string ShotRecord::to_text() const {
    std::string out;
    out.reserve(outcomes.size() * (num_qubits + 1));
    for (std::uint64_t o : outcomes) {
        for (std::size_t q = 0; q < num_qubits; q++) {
            out += ((o >> q) & 1U) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

ShotRecord sample_distribution(const std::vector<double> &probs, std::size_t num_qubits, std::size_t shots,
                               std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample: shots must be at least 1");
    }
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    const double total = cumulative.back();
    Rng rng(seed);
    ShotRecord rec{num_qubits, seed, {}};
    rec.outcomes.reserve(shots);
    for (std::size_t s = 0; s < shots; s++) {
        double u = rng.uniform() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), probs.size() - 1);
        // Never report an outcome whose probability is exactly zero.
        while (probs[idx] == 0.0 && idx > 0) {
            idx--;
        }
        rec.outcomes.push_back(idx);
    }
    return rec;
}

ShotRecord sample(const CliffordCircuit &circuit, const StateVector &state, std::size_t shots, std::uint64_t seed) {
    StateVector rotated = apply_circuit(circuit, state);
    return sample_distribution(probabilities(rotated), rotated.num_qubits(), shots, seed);
}

std::vector<double> reconstruct(const ShotRecord &record, const MeasurementMap &map) {
    if (record.num_qubits != map.num_qubits()) {
        throw std::invalid_argument("shot record and measurement map widths differ");
    }
    if (record.shots() == 0) {
        throw std::invalid_argument("reconstruct: empty shot record");
    }
    std::vector<double> out(map.size());
    for (std::size_t j = 0; j < map.size(); j++) {
        const std::uint64_t mask = mask_word(map.physical_mask(j));
        long long acc = 0;
        for (std::uint64_t o : record.outcomes) {
            acc += (std::popcount(o & mask) & 1) ? -1 : 1;
        }
        out[j] = map.signs[j] * static_cast<double>(acc) / static_cast<double>(record.shots());
    }
    return out;
}

std::vector<double> reconstruct_exact(const std::vector<double> &probs, const MeasurementMap &map) {
    if (probs.size() != (std::size_t{1} << map.num_qubits())) {
        throw std::invalid_argument("probability vector and measurement map widths differ");
    }
    std::vector<double> out(map.size());
    for (std::size_t j = 0; j < map.size(); j++) {
        const std::uint64_t mask = mask_word(map.physical_mask(j));
        double acc = 0;
        for (std::size_t b = 0; b < probs.size(); b++) {
            acc += (std::popcount(b & mask) & 1) ? -probs[b] : probs[b];
        }
        out[j] = map.signs[j] * acc;
    }
    return out;
}

StateVector random_state(std::size_t num_qubits, Rng &rng) {
    check_cap(num_qubits);
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    double total = 0;
    for (Amplitude &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Amplitude(re, im);
        total += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(total);
    for (Amplitude &a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector random_state(std::size_t num_qubits, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(num_qubits, rng);
}

}  // namespace paulimeas
