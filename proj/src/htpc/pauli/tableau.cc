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

#include "htpc/pauli/tableau.h"

#include <stdexcept>
#include <string>

namespace htpc {

Gate gate_from_name(std::string_view name) {
    if (name == "H") return Gate::H;
    if (name == "S") return Gate::S;
    if (name == "S_DAG") return Gate::S_DAG;
    if (name == "X") return Gate::X;
    if (name == "Y") return Gate::Y;
    if (name == "Z") return Gate::Z;
    if (name == "CZ") return Gate::CZ;
    if (name == "CX" || name == "CNOT") return Gate::CX;
    throw std::invalid_argument("Unsupported gate '" + std::string(name) + "': only Clifford gates are simulated");
}

std::string_view gate_name(Gate gate) {
    switch (gate) {
        case Gate::H:
            return "H";
        case Gate::S:
            return "S";
        case Gate::S_DAG:
            return "S_DAG";
        case Gate::X:
            return "X";
        case Gate::Y:
            return "Y";
        case Gate::Z:
            return "Z";
        case Gate::CZ:
            return "CZ";
        case Gate::CX:
            return "CX";
    }
    return "?";
}

bool gate_is_two_qubit(Gate gate) {
    return gate == Gate::CZ || gate == Gate::CX;
}

void conjugate_by_gate(PauliString &p, Gate gate, uint32_t a, uint32_t b) {
    bool xa = p.x(a);
    bool za = p.z(a);
    bool flip = false;
    switch (gate) {
        case Gate::H:
            flip = xa && za;
            p.set_x(a, za);
            p.set_z(a, xa);
            break;
        case Gate::S:
            flip = xa && za;
            p.set_z(a, za ^ xa);
            break;
        case Gate::S_DAG:
            flip = xa && !za;
            p.set_z(a, za ^ xa);
            break;
        case Gate::X:
            flip = za;
            break;
        case Gate::Y:
            flip = xa ^ za;
            break;
        case Gate::Z:
            flip = xa;
            break;
        case Gate::CZ: {
            bool xb = p.x(b);
            bool zb = p.z(b);
            flip = xa && xb && (za ^ zb);
            p.set_z(a, za ^ xb);
            p.set_z(b, zb ^ xa);
            break;
        }
        case Gate::CX: {
            bool xb = p.x(b);
            bool zb = p.z(b);
            flip = xa && zb && !(xb ^ za);
            p.set_x(b, xb ^ xa);
            p.set_z(a, za ^ zb);
            break;
        }
    }
    if (flip) {
        p.phase ^= 2;
    }
}

void conjugate_by_inverse_gate(PauliString &p, Gate gate, uint32_t a, uint32_t b) {
    if (gate == Gate::S) {
        gate = Gate::S_DAG;
    } else if (gate == Gate::S_DAG) {
        gate = Gate::S;
    }
    conjugate_by_gate(p, gate, a, b);
}

StabilizerTableau::StabilizerTableau(size_t n) : n_(n) {
    destabilizers_.reserve(n);
    stabilizers_.reserve(n);
    for (size_t q = 0; q < n; q++) {
        destabilizers_.push_back(PauliString::single(n, q, 'X'));
        stabilizers_.push_back(PauliString::single(n, q, 'Z'));
    }
}

void StabilizerTableau::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for tableau of " + std::to_string(n_));
    }
}

void StabilizerTableau::apply_gate(Gate gate, uint32_t q1, uint32_t q2) {
    check_qubit(q1);
    if (gate_is_two_qubit(gate)) {
        check_qubit(q2);
        if (q1 == q2) {
            throw std::invalid_argument("two-qubit gate applied to a single qubit");
        }
    }
    for (auto &row : destabilizers_) {
        conjugate_by_gate(row, gate, q1, q2);
    }
    for (auto &row : stabilizers_) {
        conjugate_by_gate(row, gate, q1, q2);
    }
}

int StabilizerTableau::peek_expectation(const PauliString &p) const {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Pauli dimension mismatch in measurement");
    }
    for (const auto &row : stabilizers_) {
        if (!commutes(row, p)) {
            return 0;
        }
    }
    PauliString acc(n_);
    for (size_t k = 0; k < n_; k++) {
        if (!commutes(destabilizers_[k], p)) {
            acc *= stabilizers_[k];
        }
    }
    // acc equals +-p; compare phases.
    uint8_t rel = (uint8_t)((acc.phase - p.phase + 4) & 3);
    return rel == 0 ? +1 : -1;
}

MeasureResult StabilizerTableau::measure_pauli(const PauliString &p, std::mt19937_64 &rng) {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Pauli dimension mismatch in measurement");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measured Pauli must be Hermitian: " + p.str());
    }
    size_t pivot = n_;
    for (size_t k = 0; k < n_; k++) {
        if (!commutes(stabilizers_[k], p)) {
            pivot = k;
            break;
        }
    }
    if (pivot == n_) {
        return MeasureResult{peek_expectation(p), true};
    }

    PauliString pivot_row = stabilizers_[pivot];
    for (size_t k = 0; k < n_; k++) {
        if (k != pivot && !commutes(stabilizers_[k], p)) {
            stabilizers_[k] *= pivot_row;
        }
        if (k != pivot && !commutes(destabilizers_[k], p)) {
            destabilizers_[k] *= pivot_row;
        }
    }
    destabilizers_[pivot] = pivot_row;
    int outcome = (rng() & 1) ? -1 : +1;
    PauliString new_row = p;
    if (outcome < 0) {
        new_row.phase ^= 2;
    }
    stabilizers_[pivot] = new_row;
    return MeasureResult{outcome, false};
}

void StabilizerTableau::reset_plus(uint32_t q, std::mt19937_64 &rng) {
    check_qubit(q);
    auto r = measure_pauli(PauliString::single(n_, q, 'Z'), rng);
    if (r.outcome < 0) {
        apply_gate(Gate::X, q);
    }
    apply_gate(Gate::H, q);
}

bool StabilizerTableau::generators_commute() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i + 1; j < n_; j++) {
            if (!commutes(stabilizers_[i], stabilizers_[j])) {
                return false;
            }
        }
    }
    return true;
}

size_t StabilizerTableau::stabilizer_rank() const {
    // Rows as 2n-bit vectors (x bits then z bits), Gaussian elimination over GF(2).
    size_t words = stabilizers_.empty() ? 0 : stabilizers_[0].xs.size();
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(n_);
    for (const auto &s : stabilizers_) {
        std::vector<uint64_t> r(2 * words);
        for (size_t w = 0; w < words; w++) {
            r[w] = s.xs[w];
            r[words + w] = s.zs[w];
        }
        rows.push_back(std::move(r));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * words * 64 && rank < rows.size(); col++) {
        size_t w = col >> 6;
        uint64_t bit = uint64_t{1} << (col & 63);
        size_t found = rows.size();
        for (size_t r = rank; r < rows.size(); r++) {
            if (rows[r][w] & bit) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && (rows[r][w] & bit)) {
                for (size_t k = 0; k < rows[r].size(); k++) {
                    rows[r][k] ^= rows[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

StabilizerTableau apply_gate(StabilizerTableau t, Gate gate, std::span<const uint32_t> qubits) {
    size_t arity = gate_is_two_qubit(gate) ? 2 : 1;
    if (qubits.size() != arity) {
        throw std::invalid_argument(
            std::string(gate_name(gate)) + " takes " + std::to_string(arity) + " qubit(s), got " +
            std::to_string(qubits.size()));
    }
    t.apply_gate(gate, qubits[0], arity == 2 ? qubits[1] : 0);
    return t;
}

std::pair<int, StabilizerTableau> measure_pauli(StabilizerTableau t, const PauliString &p, std::mt19937_64 &rng) {
    auto r = t.measure_pauli(p, rng);
    return {r.outcome, std::move(t)};
}

}  // namespace htpc
