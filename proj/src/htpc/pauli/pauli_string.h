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

#ifndef HTPC_PAULI_PAULI_STRING_H
#define HTPC_PAULI_PAULI_STRING_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace htpc {

/// A Pauli product i^phase * (sigma_0 (x) sigma_1 (x) ...) in binary symplectic form.
///
/// Qubit k carries sigma(x_k, z_k) with sigma(1,0)=X, sigma(0,1)=Z, sigma(1,1)=Y. The phase is
/// tracked exactly mod 4, so X*Z comes out as i^3 * Y (that is, -iY).
struct PauliString {
    size_t num_qubits = 0;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses strings like "+XZ_Y", "-iZZ", "XIX". '_' and 'I' both mean identity.
    static PauliString from_str(std::string_view text);
    static PauliString single(size_t num_qubits, size_t qubit, char pauli);

    bool x(size_t q) const {
        return (xs[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    /// Sets qubit q to one of 'I', 'X', 'Y', 'Z' without touching the phase.
    void set(size_t q, char pauli);
    char get(size_t q) const;

    size_t weight() const;
    bool is_identity_up_to_phase() const;
    /// True iff phase is 0 or 2, i.e. the operator is Hermitian.
    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    bool sign_negative() const {
        return phase == 2;
    }
    /// Clears qubit q (used when a qubit is consumed by a measurement).
    void clear(size_t q) {
        set_x(q, false);
        set_z(q, false);
    }

    /// In-place right multiplication: *this = (*this) * rhs.
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }
    /// Equality ignoring the phase.
    bool same_support_and_axes(const PauliString &other) const;

    std::string str() const;
};

/// Returns a*b. Throws std::invalid_argument on mismatched qubit counts.
PauliString pauli_multiply(const PauliString &a, const PauliString &b);

/// True iff the symplectic inner product of a and b vanishes.
bool commutes(const PauliString &a, const PauliString &b);

}  // namespace htpc

#endif
