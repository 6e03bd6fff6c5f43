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

#include "htpc/lattice/cluster_lattice.h"

#include <stdexcept>
#include <string>

namespace htpc {

ClusterLattice::ClusterLattice(uint32_t L) : L_(L) {
    if (L < 2) {
        throw std::invalid_argument("lattice size L must be at least 2, got " + std::to_string(L));
    }
    build_primal();
    build_dual();
    build_bonds();
}

uint32_t ClusterLattice::cell_index(int x, int y, int z) const {
    int L = (int)L_;
    x = ((x % L) + L) % L;
    y = ((y % L) + L) % L;
    z = ((z % L) + L) % L;
    return (uint32_t)((x * L + y) * L + z);
}

std::array<uint32_t, 3> ClusterLattice::cell_coords(uint32_t cell) const {
    return {cell / (L_ * L_), (cell / L_) % L_, cell % L_};
}

void ClusterLattice::build_primal() {
    primal_.kind = SublatticeKind::PRIMAL;
    primal_.num_cells = num_cells();
    primal_.qubit_cells.resize(num_primal_qubits());
    primal_.qubit_cut_axis.resize(num_primal_qubits());
    primal_.cell_qubits.resize(num_cells());
    for (uint32_t cell = 0; cell < num_cells(); cell++) {
        auto c = cell_coords(cell);
        int x = (int)c[0], y = (int)c[1], z = (int)c[2];
        for (uint32_t d = 0; d < 3; d++) {
            uint32_t q = 3 * cell + d;
            int dx = d == 0, dy = d == 1, dz = d == 2;
            primal_.qubit_cells[q] = {cell, cell_index(x - dx, y - dy, z - dz)};
            primal_.qubit_cut_axis[q] = c[d] == 0 ? (int8_t)d : (int8_t)-1;
            primal_.cell_qubits[cell][d] = q;
            primal_.cell_qubits[cell][3 + d] = 3 * cell_index(x + dx, y + dy, z + dz) + d;
        }
    }
}

void ClusterLattice::build_dual() {
    dual_.kind = SublatticeKind::DUAL;
    dual_.num_cells = num_cells();
    dual_.qubit_cells.resize(num_dual_qubits());
    dual_.qubit_cut_axis.resize(num_dual_qubits());
    dual_.cell_qubits.resize(num_cells());
    for (uint32_t v = 0; v < num_cells(); v++) {
        auto c = cell_coords(v);
        int x = (int)c[0], y = (int)c[1], z = (int)c[2];
        for (uint32_t d = 0; d < 3; d++) {
            uint32_t q = 3 * v + d;
            int dx = d == 0, dy = d == 1, dz = d == 2;
            dual_.qubit_cells[q] = {v, cell_index(x + dx, y + dy, z + dz)};
            dual_.qubit_cut_axis[q] = c[d] == L_ - 1 ? (int8_t)d : (int8_t)-1;
            dual_.cell_qubits[v][d] = q;
            dual_.cell_qubits[v][3 + d] = 3 * cell_index(x - dx, y - dy, z - dz) + d;
        }
    }
}

void ClusterLattice::build_bonds() {
    primal_bonds_.resize(num_primal_qubits());
    dual_bonds_.resize(num_dual_qubits());
    std::vector<uint8_t> dual_fill(num_dual_qubits(), 0);
    bonds_.reserve(4 * num_primal_qubits());
    for (uint32_t f = 0; f < num_primal_qubits(); f++) {
        uint32_t d = f % 3;
        auto c = cell_coords(f / 3);
        uint32_t k = 0;
        for (uint32_t a = 0; a < 3; a++) {
            if (a == d) {
                continue;
            }
            uint32_t b = 3 - a - d;
            for (int shift = 0; shift < 2; shift++) {
                std::array<int, 3> v = {(int)c[0], (int)c[1], (int)c[2]};
                v[a] += shift;
                uint32_t e = 3 * cell_index(v[0], v[1], v[2]) + b;
                uint32_t bond = (uint32_t)bonds_.size();
                bonds_.push_back(Bond{f, e});
                primal_bonds_[f][k++] = bond;
                if (dual_fill[e] >= 4) {
                    throw std::logic_error("dual qubit with more than four bonds");
                }
                dual_bonds_[e][dual_fill[e]++] = bond;
            }
        }
    }
    for (uint32_t e = 0; e < num_dual_qubits(); e++) {
        if (dual_fill[e] != 4) {
            throw std::logic_error("dual qubit " + std::to_string(e) + " has " + std::to_string(dual_fill[e]) +
                                   " bonds");
        }
    }
}

ClusterLattice build_lattice(uint32_t L) {
    return ClusterLattice(L);
}

}  // namespace htpc
