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

#ifndef HTPC_PAULI_CIRCUIT_H
#define HTPC_PAULI_CIRCUIT_H

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "htpc/pauli/pauli_string.h"
#include "htpc/pauli/tableau.h"

namespace htpc {

enum class OpType : uint8_t {
    PREPARE_PLUS,
    GATE,
    /// Parity projection: measures Z(q0)Z(q1) into a record; both qubits survive.
    MEASURE_ZZ,
    /// Single-qubit measurement in `basis`; the qubit is consumed.
    MEASURE,
    /// Applies the Pauli ff_targets[ff_begin, ff_end) if record `record` reads -1.
    FEEDFORWARD,
    NOISE1,
    NOISE2,
    /// `count` idle time steps on q0, each an independent memory fault location.
    IDLE,
    TICK,
};

/// Which probability an error location draws from.
enum class NoiseClass : uint8_t {
    GATE,
    MEMORY,
    FIXED,
};

struct Op {
    OpType type;
    Gate gate = Gate::H;
    char basis = 'Z';
    NoiseClass noise = NoiseClass::GATE;
    uint32_t q0 = 0;
    uint32_t q1 = 0;
    /// Measurement record written (MEASURE, MEASURE_ZZ) or read (FEEDFORWARD); idle count for IDLE.
    uint32_t record = 0;
    uint32_t ff_begin = 0;
    uint32_t ff_end = 0;
    double p = 0;
};

/// Pauli on one qubit: bit 0 = X component, bit 1 = Z component.
struct QubitPauli {
    uint32_t qubit;
    uint8_t xz;
};

/// Flat list of Clifford operations, measurements, outcome-conditioned Pauli corrections and
/// error locations. Corrections are specified for the -1 outcome of their record.
class Circuit {
   public:
    explicit Circuit(uint32_t num_qubits = 0) : num_qubits_(num_qubits) {
    }

    uint32_t num_qubits() const {
        return num_qubits_;
    }
    uint32_t num_measurements() const {
        return num_measurements_;
    }
    const std::vector<Op> &ops() const {
        return ops_;
    }
    std::span<const QubitPauli> feedforward_targets(const Op &op) const {
        return {ff_targets_.data() + op.ff_begin, op.ff_end - op.ff_begin};
    }

    uint32_t add_qubit() {
        return num_qubits_++;
    }

    void prepare_plus(uint32_t q);
    void gate(Gate g, uint32_t q0, uint32_t q1 = 0);
    void cz(uint32_t a, uint32_t b) {
        gate(Gate::CZ, a, b);
    }
    uint32_t parity_projection(uint32_t a, uint32_t b);
    uint32_t measure(uint32_t q, char basis);
    void feedforward(uint32_t record, std::span<const QubitPauli> targets);
    void error_channel(uint32_t q, NoiseClass cls, double p = 0);
    void error_channel(uint32_t a, uint32_t b, NoiseClass cls, double p = 0);
    void idle(uint32_t q, uint32_t steps);
    void tick();

    std::string str() const;

   private:
    void check(uint32_t q) const;

    uint32_t num_qubits_;
    uint32_t num_measurements_ = 0;
    std::vector<Op> ops_;
    std::vector<QubitPauli> ff_targets_;
};

/// Pauli frame: one X bit and one Z bit per qubit plus one flip bit per measurement record.
struct PauliFrame {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;
    std::vector<uint8_t> flips;

    explicit PauliFrame(const Circuit &c) : x(c.num_qubits(), 0), z(c.num_qubits(), 0), flips(c.num_measurements(), 0) {
    }
    void apply(uint32_t q, uint8_t xz) {
        x[q] ^= xz & 1;
        z[q] ^= (xz >> 1) & 1;
    }
};

/// Pushes the frame through one non-noise operation. Noise ops and ticks are no-ops here.
void step_frame(const Circuit &c, const Op &op, PauliFrame &frame);

struct PropagatedError {
    /// Residual on qubits that are still unmeasured at the end of the circuit.
    PauliString residual;
    /// Measurement records whose outcome the fault flipped.
    std::vector<uint8_t> flipped;
};

/// Inserts `fault` immediately before ops()[location] (location == ops().size() means at the end)
/// and pushes it through the rest of the circuit. Throws std::out_of_range for a bad location.
PropagatedError propagate_error(const Circuit &c, size_t location, const PauliString &fault);

/// Runs the circuit on a tableau, sampling outcomes and applying corrections. Noise ops are ignored.
/// Returns the measurement record (+1/-1 per record).
std::vector<int> run_on_tableau(const Circuit &c, StabilizerTableau &t, std::mt19937_64 &rng);

}  // namespace htpc

#endif
