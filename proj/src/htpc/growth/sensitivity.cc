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


#include "htpc/growth/sensitivity.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "htpc/util/rng.h"

namespace htpc {

std::vector<SiteSensitivity> backward_sensitivity(const Circuit &c, std::span<const Observable> observables) {
    if (observables.size() > 32) {
        throw std::invalid_argument("at most 32 observables per pass");
    }
    uint32_t n = c.num_qubits();
    // fx[q] (fz[q]): observables flipped by an X (Z) fault on q at the current point.
    std::vector<uint32_t> fx(n, 0);
    std::vector<uint32_t> fz(n, 0);
    std::vector<uint8_t> observed(n, 0);
    for (size_t i = 0; i < observables.size(); i++) {
        const auto &o = observables[i];
        if (o.qubit >= n) {
            throw std::out_of_range("observable qubit out of range");
        }
        if (o.component == 'Z') {
            fz[o.qubit] |= 1u << i;
        } else if (o.component == 'X') {
            fx[o.qubit] |= 1u << i;
        } else {
            throw std::invalid_argument("observable component must be 'X' or 'Z'");
        }
        observed[o.qubit] = 1;
    }
    std::vector<uint32_t> record_mask(c.num_measurements(), 0);
    std::vector<SiteSensitivity> sites;
    const auto &ops = c.ops();
    for (size_t k = ops.size(); k-- > 0;) {
        const Op &op = ops[k];
        uint32_t a = op.q0;
        uint32_t b = op.q1;
        switch (op.type) {
            case OpType::NOISE1:
            case OpType::IDLE:
                sites.push_back({(uint32_t)k, fx[a], fz[a]});
                break;
            case OpType::NOISE2:
                sites.push_back({(uint32_t)k, fx[a], fz[a], fx[b], fz[b]});
                break;
            case OpType::PREPARE_PLUS:
                fx[a] = 0;
                fz[a] = 0;
                break;
            case OpType::GATE:
                switch (op.gate) {
                    case Gate::H:
                        std::swap(fx[a], fz[a]);
                        break;
                    case Gate::S:
                    case Gate::S_DAG:
                        fx[a] ^= fz[a];
                        break;
                    case Gate::X:
                    case Gate::Y:
                    case Gate::Z:
                        break;
                    case Gate::CZ:
                        fx[a] ^= fz[b];
                        fx[b] ^= fz[a];
                        break;
                    case Gate::CX:
                        fx[a] ^= fx[b];
                        fz[b] ^= fz[a];
                        break;
                }
                break;
            case OpType::FEEDFORWARD: {
                uint32_t m = 0;
                for (const auto &t : c.feedforward_targets(op)) {
                    if (t.xz & 1) m ^= fx[t.qubit];
                    if (t.xz & 2) m ^= fz[t.qubit];
                }
                record_mask[op.record] ^= m;
                break;
            }
            case OpType::MEASURE: {
                if (observed[a]) {
                    throw std::invalid_argument("observable qubit " + std::to_string(a) + " is measured");
                }
                uint32_t m = record_mask[op.record];
                fx[a] = op.basis == 'X' ? 0 : m;
                fz[a] = op.basis == 'Z' ? 0 : m;
                break;
            }
            case OpType::MEASURE_ZZ: {
                uint32_t m = record_mask[op.record];
                fx[a] ^= m;
                fx[b] ^= m;
                break;
            }
            case OpType::TICK:
                break;
        }
    }
    std::reverse(sites.begin(), sites.end());
    return sites;
}

namespace {

uint8_t random_pauli(std::mt19937_64 &rng) {
    return (uint8_t)(1 + rng() % 3);
}

}  // namespace

uint32_t sample_forward(const Circuit &c, std::span<const Observable> observables, double p_G, double p_M,
                        MemoryModel memory, std::mt19937_64 &rng) {
    PauliFrame frame(c);
    for (const auto &op : c.ops()) {
        switch (op.type) {
            case OpType::NOISE1:
                if (bernoulli(rng, p_G)) {
                    frame.apply(op.q0, random_pauli(rng));
                }
                break;
            case OpType::NOISE2:
                if (bernoulli(rng, p_G)) {
                    uint32_t k = 1 + (uint32_t)(rng() % 15);
                    frame.apply(op.q0, (uint8_t)(k & 3));
                    frame.apply(op.q1, (uint8_t)(k >> 2));
                }
                break;
            case OpType::IDLE:
                for (uint32_t s = 0; s < op.record; s++) {
                    if (bernoulli(rng, p_M)) {
                        frame.apply(op.q0, memory == MemoryModel::DEPHASING ? 2 : random_pauli(rng));
                    }
                }
                break;
            default:
                step_frame(c, op, frame);
        }
    }
    uint32_t mask = 0;
    for (size_t i = 0; i < observables.size(); i++) {
        const auto &o = observables[i];
        uint8_t bit = o.component == 'Z' ? frame.z[o.qubit] : frame.x[o.qubit];
        if (bit) {
            mask |= 1u << i;
        }
    }
    return mask;
}

}  // namespace htpc
