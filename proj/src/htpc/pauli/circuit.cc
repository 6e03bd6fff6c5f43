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

#include "htpc/pauli/circuit.h"

#include <sstream>
#include <stdexcept>

namespace htpc {

void Circuit::check(uint32_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("circuit qubit " + std::to_string(q) + " out of range (" +
                                std::to_string(num_qubits_) + " qubits)");
    }
}

void Circuit::prepare_plus(uint32_t q) {
    check(q);
    ops_.push_back(Op{.type = OpType::PREPARE_PLUS, .q0 = q});
}

void Circuit::gate(Gate g, uint32_t q0, uint32_t q1) {
    check(q0);
    if (gate_is_two_qubit(g)) {
        check(q1);
        if (q0 == q1) {
            throw std::invalid_argument("two-qubit gate on a single qubit");
        }
    }
    ops_.push_back(Op{.type = OpType::GATE, .gate = g, .q0 = q0, .q1 = q1});
}

uint32_t Circuit::parity_projection(uint32_t a, uint32_t b) {
    check(a);
    check(b);
    if (a == b) {
        throw std::invalid_argument("parity projection needs two distinct qubits");
    }
    ops_.push_back(Op{.type = OpType::MEASURE_ZZ, .q0 = a, .q1 = b, .record = num_measurements_});
    return num_measurements_++;
}

uint32_t Circuit::measure(uint32_t q, char basis) {
    check(q);
    if (basis != 'X' && basis != 'Y' && basis != 'Z') {
        throw std::invalid_argument("measurement basis must be X, Y or Z");
    }
    ops_.push_back(Op{.type = OpType::MEASURE, .basis = basis, .q0 = q, .record = num_measurements_});
    return num_measurements_++;
}

void Circuit::feedforward(uint32_t record, std::span<const QubitPauli> targets) {
    if (record >= num_measurements_) {
        throw std::out_of_range("feedforward reads record " + std::to_string(record) + " before it exists");
    }
    if (targets.empty()) {
        return;
    }
    Op op{.type = OpType::FEEDFORWARD, .record = record};
    op.ff_begin = (uint32_t)ff_targets_.size();
    for (const auto &t : targets) {
        check(t.qubit);
        ff_targets_.push_back(t);
    }
    op.ff_end = (uint32_t)ff_targets_.size();
    ops_.push_back(op);
}

void Circuit::error_channel(uint32_t q, NoiseClass cls, double p) {
    check(q);
    ops_.push_back(Op{.type = OpType::NOISE1, .noise = cls, .q0 = q, .p = p});
}

void Circuit::error_channel(uint32_t a, uint32_t b, NoiseClass cls, double p) {
    check(a);
    check(b);
    ops_.push_back(Op{.type = OpType::NOISE2, .noise = cls, .q0 = a, .q1 = b, .p = p});
}

void Circuit::idle(uint32_t q, uint32_t steps) {
    check(q);
    if (steps == 0) {
        return;
    }
    ops_.push_back(Op{.type = OpType::IDLE, .noise = NoiseClass::MEMORY, .q0 = q, .record = steps});
}

void Circuit::tick() {
    ops_.push_back(Op{.type = OpType::TICK});
}

std::string Circuit::str() const {
    std::ostringstream out;
    for (const auto &op : ops_) {
        switch (op.type) {
            case OpType::PREPARE_PLUS:
                out << "RX " << op.q0 << "\n";
                break;
            case OpType::GATE:
                out << gate_name(op.gate) << " " << op.q0;
                if (gate_is_two_qubit(op.gate)) {
                    out << " " << op.q1;
                }
                out << "\n";
                break;
            case OpType::MEASURE_ZZ:
                out << "MZZ " << op.q0 << " " << op.q1 << " -> m" << op.record << "\n";
                break;
            case OpType::MEASURE:
                out << "M" << op.basis << " " << op.q0 << " -> m" << op.record << "\n";
                break;
            case OpType::FEEDFORWARD: {
                out << "IF m" << op.record << ":";
                for (const auto &t : feedforward_targets(op)) {
                    out << " " << "IXZY"[t.xz] << t.qubit;
                }
                out << "\n";
                break;
            }
            case OpType::NOISE1:
                out << "NOISE1 " << op.q0 << "\n";
                break;
            case OpType::NOISE2:
                out << "NOISE2 " << op.q0 << " " << op.q1 << "\n";
                break;
            case OpType::IDLE:
                out << "IDLE " << op.q0 << " x" << op.record << "\n";
                break;
            case OpType::TICK:
                out << "TICK\n";
                break;
        }
    }
    return out.str();
}

void step_frame(const Circuit &c, const Op &op, PauliFrame &f) {
    switch (op.type) {
        case OpType::PREPARE_PLUS:
            f.x[op.q0] = 0;
            f.z[op.q0] = 0;
            break;
        case OpType::GATE: {
            uint32_t a = op.q0;
            uint32_t b = op.q1;
            switch (op.gate) {
                case Gate::H:
                    std::swap(f.x[a], f.z[a]);
                    break;
                case Gate::S:
                case Gate::S_DAG:
                    f.z[a] ^= f.x[a];
                    break;
                case Gate::X:
                case Gate::Y:
                case Gate::Z:
                    break;
                case Gate::CZ:
                    f.z[a] ^= f.x[b];
                    f.z[b] ^= f.x[a];
                    break;
                case Gate::CX:
                    f.x[b] ^= f.x[a];
                    f.z[a] ^= f.z[b];
                    break;
            }
            break;
        }
        case OpType::MEASURE_ZZ:
            f.flips[op.record] ^= f.x[op.q0] ^ f.x[op.q1];
            break;
        case OpType::MEASURE: {
            uint32_t q = op.q0;
            uint8_t anti = 0;
            if (op.basis == 'X') {
                anti = f.z[q];
            } else if (op.basis == 'Z') {
                anti = f.x[q];
            } else {
                anti = f.x[q] ^ f.z[q];
            }
            f.flips[op.record] ^= anti;
            f.x[q] = 0;
            f.z[q] = 0;
            break;
        }
        case OpType::FEEDFORWARD:
            if (f.flips[op.record]) {
                for (const auto &t : c.feedforward_targets(op)) {
                    f.apply(t.qubit, t.xz);
                }
            }
            break;
        case OpType::NOISE1:
        case OpType::NOISE2:
        case OpType::IDLE:
        case OpType::TICK:
            break;
    }
}

PropagatedError propagate_error(const Circuit &c, size_t location, const PauliString &fault) {
    const auto &ops = c.ops();
    if (location > ops.size()) {
        throw std::out_of_range(
            "fault location " + std::to_string(location) + " past end of circuit (" + std::to_string(ops.size()) +
            " ops)");
    }
    if (fault.num_qubits != c.num_qubits()) {
        throw std::invalid_argument("fault Pauli does not match circuit qubit count");
    }
    PauliFrame frame(c);
    for (uint32_t q = 0; q < c.num_qubits(); q++) {
        frame.x[q] = fault.x(q);
        frame.z[q] = fault.z(q);
    }
    std::vector<uint8_t> consumed(c.num_qubits(), 0);
    for (size_t k = 0; k < location; k++) {
        if (ops[k].type == OpType::MEASURE) {
            consumed[ops[k].q0] = 1;
        }
    }
    for (size_t k = location; k < ops.size(); k++) {
        step_frame(c, ops[k], frame);
        if (ops[k].type == OpType::MEASURE) {
            consumed[ops[k].q0] = 1;
        }
    }
    PropagatedError result{PauliString(c.num_qubits()), std::move(frame.flips)};
    for (uint32_t q = 0; q < c.num_qubits(); q++) {
        if (!consumed[q]) {
            result.residual.set_x(q, frame.x[q]);
            result.residual.set_z(q, frame.z[q]);
        }
    }
    return result;
}

std::vector<int> run_on_tableau(const Circuit &c, StabilizerTableau &t, std::mt19937_64 &rng) {
    if (t.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("tableau size does not match circuit");
    }
    std::vector<int> record(c.num_measurements(), +1);
    size_t n = c.num_qubits();
    for (const auto &op : c.ops()) {
        switch (op.type) {
            case OpType::PREPARE_PLUS:
                t.reset_plus(op.q0, rng);
                break;
            case OpType::GATE:
                t.apply_gate(op.gate, op.q0, op.q1);
                break;
            case OpType::MEASURE_ZZ: {
                PauliString p(n);
                p.set(op.q0, 'Z');
                p.set(op.q1, 'Z');
                record[op.record] = t.measure_pauli(p, rng).outcome;
                break;
            }
            case OpType::MEASURE:
                record[op.record] = t.measure_pauli(PauliString::single(n, op.q0, op.basis), rng).outcome;
                break;
            case OpType::FEEDFORWARD:
                if (record[op.record] < 0) {
                    for (const auto &tg : c.feedforward_targets(op)) {
                        if (tg.xz & 1) {
                            t.apply_gate(Gate::X, tg.qubit);
                        }
                        if (tg.xz & 2) {
                            t.apply_gate(Gate::Z, tg.qubit);
                        }
                    }
                }
                break;
            case OpType::NOISE1:
            case OpType::NOISE2:
            case OpType::IDLE:
            case OpType::TICK:
                break;
        }
    }
    return record;
}

}  // namespace htpc
