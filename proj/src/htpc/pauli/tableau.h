// Copyright 2026 The herald-tpc Authors
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

#ifndef HTPC_PAULI_TABLEAU_H
#define HTPC_PAULI_TABLEAU_H

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "htpc/pauli/pauli_string.h"

namespace htpc {

enum class Gate : uint8_t {
    H,
    S,
    S_DAG,
    X,
    Y,
    Z,
    CZ,
    CX,
};

/// Looks up a Clifford gate by name ("H", "S", "S_DAG", "X", "Y", "Z", "CZ", "CX"/"CNOT").
/// Anything else, including non-Clifford names like "T", throws std::invalid_argument.
Gate gate_from_name(std::string_view name);
std::string_view gate_name(Gate gate);
bool gate_is_two_qubit(Gate gate);

/// Conjugates p in place: p -> U p U^dagger, tracking the sign exactly.
void conjugate_by_gate(PauliString &p, Gate gate, uint32_t q1, uint32_t q2 = 0);

/// Conjugates p in place by U^dagger: p -> U^dagger p U.
void conjugate_by_inverse_gate(PauliString &p, Gate gate, uint32_t q1, uint32_t q2 = 0);

struct MeasureResult {
    /// +1 or -1: the post-measurement state is stabilized by (outcome * p).
    int outcome;
    bool deterministic;
};

/// Aaronson-Gottesman tableau with destabilizers. Starts in |0...0>.
class StabilizerTableau {
   public:
    explicit StabilizerTableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliString> &stabilizers() const {
        return stabilizers_;
    }
    const std::vector<PauliString> &destabilizers() const {
        return destabilizers_;
    }

    void apply_gate(Gate gate, uint32_t q1, uint32_t q2 = 0);
    MeasureResult measure_pauli(const PauliString &p, std::mt19937_64 &rng);
    /// Returns +1/-1 if p (Hermitian) has a deterministic outcome, 0 otherwise. Does not modify the state.
    int peek_expectation(const PauliString &p) const;
    /// Resets qubit q into |+>.
    void reset_plus(uint32_t q, std::mt19937_64 &rng);

    bool generators_commute() const;
    /// GF(2) rank of the stabilizer generators in symplectic form.
    size_t stabilizer_rank() const;

   private:
    void check_qubit(uint32_t q) const;

    size_t n_;
    std::vector<PauliString> destabilizers_;
    std::vector<PauliString> stabilizers_;
};

/// Value-returning forms of the tableau operations.
StabilizerTableau apply_gate(StabilizerTableau t, Gate gate, std::span<const uint32_t> qubits);
std::pair<int, StabilizerTableau> measure_pauli(StabilizerTableau t, const PauliString &p, std::mt19937_64 &rng);

}  // namespace htpc

#endif
