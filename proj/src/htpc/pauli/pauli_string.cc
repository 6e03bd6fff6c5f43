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

#include "htpc/pauli/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace htpc {

namespace {

size_t num_words(size_t n) {
    return (n + 63) >> 6;
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument(
            "Pauli dimension mismatch: " + std::to_string(a.num_qubits) + " vs " + std::to_string(b.num_qubits));
    }
}

// Power of i picked up by sigma(x1,z1) * sigma(x2,z2), in {-1, 0, 1}.
int product_phase(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return (int)z2 - (int)x2;
    }
    if (x1) {
        return z2 ? (x2 ? 1 : -1) : 0;
    }
    return x2 ? (z2 ? -1 : 1) : 0;
}

}  // namespace

PauliString::PauliString(size_t n) : num_qubits(n), xs(num_words(n), 0), zs(num_words(n), 0), phase(0) {
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            phase = 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = (phase + 1) & 3;
        k++;
    }
    PauliString result(text.size() - k);
    result.phase = phase;
    for (size_t q = 0; k < text.size(); k++, q++) {
        char c = text[k];
        if (c == '_') {
            c = 'I';
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("Unrecognized Pauli character '" + std::string(1, c) + "'");
        }
        result.set(q, c);
    }
    return result;
}

PauliString PauliString::single(size_t n, size_t qubit, char pauli) {
    if (qubit >= n) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n));
    }
    PauliString result(n);
    result.set(qubit, pauli);
    return result;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t bit = uint64_t{1} << (q & 63);
    if (v) {
        xs[q >> 6] |= bit;
    } else {
        xs[q >> 6] &= ~bit;
    }
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t bit = uint64_t{1} << (q & 63);
    if (v) {
        zs[q >> 6] |= bit;
    } else {
        zs[q >> 6] &= ~bit;
    }
}

void PauliString::set(size_t q, char pauli) {
    switch (pauli) {
        case 'I':
        case '_':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument("Unrecognized Pauli character '" + std::string(1, pauli) + "'");
    }
}

char PauliString::get(size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(int)x(q) + 2 * (int)z(q)];
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        total += std::popcount(xs[w] | zs[w]);
    }
    return total;
}

bool PauliString::is_identity_up_to_phase() const {
    return weight() == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    require_same_size(*this, rhs);
    int acc = phase + rhs.phase;
    for (size_t w = 0; w < xs.size(); w++) {
        uint64_t active = (xs[w] | zs[w]) & (rhs.xs[w] | rhs.zs[w]);
        while (active) {
            int b = std::countr_zero(active);
            active &= active - 1;
            acc += product_phase(
                (xs[w] >> b) & 1, (zs[w] >> b) & 1, (rhs.xs[w] >> b) & 1, (rhs.zs[w] >> b) & 1);
        }
        xs[w] ^= rhs.xs[w];
        zs[w] ^= rhs.zs[w];
    }
    phase = (uint8_t)(((acc % 4) + 4) % 4);
    return *this;
}

bool PauliString::operator==(const PauliString &other) const {
    return phase == other.phase && same_support_and_axes(other);
}

bool PauliString::same_support_and_axes(const PauliString &other) const {
    return num_qubits == other.num_qubits && xs == other.xs && zs == other.zs;
}

std::string PauliString::str() const {
    static constexpr const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string result = prefixes[phase];
    for (size_t q = 0; q < num_qubits; q++) {
        char c = get(q);
        result.push_back(c == 'I' ? '_' : c);
    }
    return result;
}

PauliString pauli_multiply(const PauliString &a, const PauliString &b) {
    PauliString result = a;
    result *= b;
    return result;
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    uint64_t acc = 0;
    for (size_t w = 0; w < a.xs.size(); w++) {
        acc ^= (a.xs[w] & b.zs[w]) ^ (a.zs[w] & b.xs[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

}  // namespace htpc
