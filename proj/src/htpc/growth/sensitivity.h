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


#ifndef HTPC_GROWTH_SENSITIVITY_H
#define HTPC_GROWTH_SENSITIVITY_H

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "htpc/growth/strategy.h"
#include "htpc/pauli/circuit.h"

namespace htpc {

/// A final-time observable: whether the residual error on `qubit` has a component of type
/// `component` ('X' or 'Z'). Up to 32 observables per pass.
struct Observable {
    uint32_t qubit;
    char component;
};

/// For one error location, the observables each Pauli component on the location's qubits flips.
/// A Pauli with X part on qubit a flips the observables in a_x, its Z part those in a_z.
struct SiteSensitivity {
    uint32_t op_index;
    uint32_t a_x = 0;
    uint32_t a_z = 0;
    uint32_t b_x = 0;
    uint32_t b_z = 0;

    /// Observable flips caused by Pauli pa (bit 0 = X, bit 1 = Z) on the first qubit and pb on
    /// the second.
    uint32_t flips(uint8_t pa, uint8_t pb = 0) const {
        uint32_t m = 0;
        if (pa & 1) m ^= a_x;
        if (pa & 2) m ^= a_z;
        if (pb & 1) m ^= b_x;
        if (pb & 2) m ^= b_z;
        return m;
    }
};

/// One backward (Heisenberg-picture) pass over the circuit yielding the sensitivity of every
/// NOISE1, NOISE2 and IDLE op, in circuit order. Throws std::invalid_argument if an observable
/// sits on a qubit that is measured during the circuit.
std::vector<SiteSensitivity> backward_sensitivity(const Circuit &c, std::span<const Observable> observables);

/// Samples every error location (gate locations with p_G, memory steps with p_M) and pushes the
/// frame forward through the circuit; returns the bitmask of flipped observables.
uint32_t sample_forward(const Circuit &c, std::span<const Observable> observables, double p_G, double p_M,
                        MemoryModel memory, std::mt19937_64 &rng);

}  // namespace htpc

#endif
