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

#ifndef HTPC_LATTICE_CLUSTER_LATTICE_H
#define HTPC_LATTICE_CLUSTER_LATTICE_H

#include <array>
#include <cstdint>
#include <vector>

namespace htpc {

enum class SublatticeKind : uint8_t {
    PRIMAL,
    DUAL,
};

/// One sublattice seen as a decoding graph: cells are parity checks, face qubits are edges
/// between the two cells they bound.
struct Sublattice {
    SublatticeKind kind;
    uint32_t num_cells = 0;
    /// The two cells bordering each face qubit.
    std::vector<std::array<uint32_t, 2>> qubit_cells;
    /// The six face qubits of each cell.
    std::vector<std::array<uint32_t, 6>> cell_qubits;
    /// Axis (0,1,2) whose fixed cut plane this qubit crosses, or -1.
    std::vector<int8_t> qubit_cut_axis;

    uint32_t num_qubits() const {
        return (uint32_t)qubit_cells.size();
    }
};

struct Bond {
    uint32_t primal;
    uint32_t dual;
};

/// Raussendorf lattice on a periodic L x L x L torus.
///
/// Primal cells sit at integer cell coordinates c. Primal face qubit 3*cell(c)+d is the face of
/// cell c normal to axis d on its low side, shared with cell c-e_d. Dual qubits live on primal
/// edges: dual qubit 3*vertex(v)+d is the edge from vertex v to v+e_d, and dual cells are
/// centred on primal vertices. Every bond joins a primal face to one of its four edges; bond
/// 4*f+k is the k-th bond of primal face f.
class ClusterLattice {
   public:
    explicit ClusterLattice(uint32_t L);

    uint32_t size() const {
        return L_;
    }
    uint32_t num_cells() const {
        return L_ * L_ * L_;
    }
    uint32_t num_primal_qubits() const {
        return 3 * num_cells();
    }
    uint32_t num_dual_qubits() const {
        return 3 * num_cells();
    }
    uint32_t num_bonds() const {
        return (uint32_t)bonds_.size();
    }

    const Sublattice &primal() const {
        return primal_;
    }
    const Sublattice &dual() const {
        return dual_;
    }
    const Sublattice &sublattice(SublatticeKind k) const {
        return k == SublatticeKind::PRIMAL ? primal_ : dual_;
    }
    const std::vector<Bond> &bonds() const {
        return bonds_;
    }
    const std::array<uint32_t, 4> &primal_qubit_bonds(uint32_t q) const {
        return primal_bonds_[q];
    }
    const std::array<uint32_t, 4> &dual_qubit_bonds(uint32_t q) const {
        return dual_bonds_[q];
    }

    uint32_t cell_index(int x, int y, int z) const;
    std::array<uint32_t, 3> cell_coords(uint32_t cell) const;
    uint32_t primal_qubit(uint32_t axis, int x, int y, int z) const {
        return 3 * cell_index(x, y, z) + axis;
    }
    uint32_t dual_qubit(uint32_t axis, int x, int y, int z) const {
        return 3 * cell_index(x, y, z) + axis;
    }

   private:
    void build_primal();
    void build_dual();
    void build_bonds();

    uint32_t L_;
    Sublattice primal_;
    Sublattice dual_;
    std::vector<Bond> bonds_;
    std::vector<std::array<uint32_t, 4>> primal_bonds_;
    std::vector<std::array<uint32_t, 4>> dual_bonds_;
};

/// Throws std::invalid_argument for L < 2.
ClusterLattice build_lattice(uint32_t L);

}  // namespace htpc

#endif
