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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "paulimeas/circuit.hpp"
#include "paulimeas/measurement_map.hpp"
#include "paulimeas/pauli.hpp"
#include "paulimeas/rng.hpp"

namespace paulimeas {

inline constexpr std::size_t kMaxSimQubits = 14;

using Amplitude = std::complex<double>;

/// Dense state. Basis index bit q is the value of qubit q.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(std::size_t num_qubits);
    static StateVector basis(std::size_t num_qubits, std::uint64_t index);
    /// Length must be a power of two and the vector normalized to within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return amps_.size();
    }
    const std::vector<Amplitude> &amplitudes() const noexcept {
        return amps_;
    }
    Amplitude &operator[](std::size_t i) {
        return amps_[i];
    }
    const Amplitude &operator[](std::size_t i) const {
        return amps_[i];
    }
    double norm() const;
    /// Throws std::invalid_argument if |norm - 1| > tol.
    void require_normalized(double tol = 1e-9) const;

   private:
    StateVector() = default;
    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

void apply_gate(const Gate &g, StateVector &state);
StateVector apply_circuit(const CliffordCircuit &circuit, StateVector state);

/// <psi|P|psi>; P is Hermitian so the result is real.
double expectation(const Pauli &p, const StateVector &state);
/// <psi|P|psi> without taking the real part, for phased products.
Amplitude expectation_complex(const Pauli &p, const StateVector &state);

std::vector<double> probabilities(const StateVector &state);

struct ShotRecord {
    std::size_t num_qubits = 0;
    std::uint64_t seed = 0;
    /// Bit q of each outcome is the result for qubit q.
    std::vector<std::uint64_t> outcomes;

    std::size_t shots() const noexcept {
        return outcomes.size();
    }
    BitVector bitstring(std::size_t shot) const;
    /// One line per shot, qubit 0 first.
    std::string to_text() const;
};

/// Measures U|psi> in the computational basis `shots` times.
ShotRecord sample(const CliffordCircuit &circuit, const StateVector &state, std::size_t shots, std::uint64_t seed);
ShotRecord sample_distribution(const std::vector<double> &probs, std::size_t num_qubits, std::size_t shots,
                               std::uint64_t seed);

std::vector<double> reconstruct(const ShotRecord &record, const MeasurementMap &map);
/// Same estimator evaluated against exact outcome probabilities (infinite-shot limit).
std::vector<double> reconstruct_exact(const std::vector<double> &probs, const MeasurementMap &map);

/// Normalized standard complex Gaussian vector, i.e. uniform on the unit sphere.
StateVector random_state(std::size_t num_qubits, Rng &rng);
StateVector random_state(std::size_t num_qubits, std::uint64_t seed);

}  // namespace paulimeas
