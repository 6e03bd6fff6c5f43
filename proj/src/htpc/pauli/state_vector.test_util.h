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


#ifndef HTPC_PAULI_STATE_VECTOR_TEST_UTIL_H
#define HTPC_PAULI_STATE_VECTOR_TEST_UTIL_H

#include <complex>
#include <random>
#include <vector>

#include "htpc/pauli/pauli_string.h"
#include "htpc/pauli/tableau.h"

namespace htpc {

/// Dense state vector used as an independent oracle for the tableau. Qubit q is bit q of the index.
struct StateVector {
    size_t n;
    std::vector<std::complex<double>> amp;

    explicit StateVector(size_t n) : n(n), amp(size_t{1} << n, 0.0) {
        amp[0] = 1.0;
    }

    void apply_gate(Gate g, uint32_t a, uint32_t b = 0) {
        using C = std::complex<double>;
        const C I(0, 1);
        size_t ma = size_t{1} << a;
        size_t mb = size_t{1} << b;
        std::vector<C> out(amp.size(), 0.0);
        for (size_t k = 0; k < amp.size(); k++) {
            C v = amp[k];
            bool ba = k & ma;
            bool bb = k & mb;
            switch (g) {
                case Gate::H: {
                    double s = 1 / std::sqrt(2.0);
                    out[k & ~ma] += v * s;
                    out[k | ma] += v * (ba ? -s : s);
                    break;
                }
                case Gate::S:
                    out[k] += ba ? v * I : v;
                    break;
                case Gate::S_DAG:
                    out[k] += ba ? -v * I : v;
                    break;
                case Gate::X:
                    out[k ^ ma] += v;
                    break;
                case Gate::Y:
                    out[k ^ ma] += ba ? -I * v : I * v;
                    break;
                case Gate::Z:
                    out[k] += ba ? -v : v;
                    break;
                case Gate::CZ:
                    out[k] += (ba && bb) ? -v : v;
                    break;
                case Gate::CX:
                    out[ba ? k ^ mb : k] += v;
                    break;
            }
        }
        amp = std::move(out);
    }

    /// Returns P|psi> for P = i^phase * prod sigma.
    std::vector<std::complex<double>> apply_pauli(const PauliString &p) const {
        using C = std::complex<double>;
        const C I(0, 1);
        std::vector<C> out(amp.size(), 0.0);
        for (size_t k = 0; k < amp.size(); k++) {
            C v = amp[k];
            size_t t = k;
            // Apply right-to-left: Z first then X gives X Z = -iY per qubit, fix with i per Y.
            for (size_t q = 0; q < n; q++) {
                bool x = p.x(q);
                bool z = p.z(q);
                bool bit = (k >> q) & 1;
                if (z && bit) {
                    v = -v;
                }
                if (x) {
                    t ^= size_t{1} << q;
                }
                if (x && z) {
                    v *= I;
                }
            }
            for (int r = 0; r < p.phase; r++) {
                v *= I;
            }
            out[t] += v;
        }
        return out;
    }

    double expectation(const PauliString &p) const {
        auto pv = apply_pauli(p);
        std::complex<double> s = 0;
        for (size_t k = 0; k < amp.size(); k++) {
            s += std::conj(amp[k]) * pv[k];
        }
        return s.real();
    }

    /// Projects onto the (outcome) eigenspace of Hermitian p and renormalizes.
    /// Returns the probability of `outcome`.
    double project(const PauliString &p, int outcome) {
        auto pv = apply_pauli(p);
        double norm = 0;
        for (size_t k = 0; k < amp.size(); k++) {
            amp[k] = 0.5 * (amp[k] + (double)outcome * pv[k]);
            norm += std::norm(amp[k]);
        }
        if (norm > 1e-12) {
            for (auto &a : amp) {
                a /= std::sqrt(norm);
            }
        }
        return norm;
    }
};

}  // namespace htpc

#endif
