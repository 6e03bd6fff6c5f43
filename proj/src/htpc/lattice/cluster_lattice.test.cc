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

#include <map>
#include <set>

#include "gtest/gtest.h"

using namespace htpc;

TEST(cluster_lattice, counts_l4) {
    auto lat = build_lattice(4);
    ASSERT_EQ(lat.num_cells(), 64u);
    ASSERT_EQ(lat.num_primal_qubits(), 192u);
    ASSERT_EQ(lat.num_dual_qubits(), 192u);
    ASSERT_EQ(lat.num_bonds(), 768u);
}

TEST(cluster_lattice, rejects_small) {
    ASSERT_THROW(build_lattice(1), std::invalid_argument);
    ASSERT_THROW(build_lattice(0), std::invalid_argument);
}

TEST(cluster_lattice, incidence_invariants) {
    for (uint32_t L : {2u, 3u, 4u}) {
        auto lat = build_lattice(L);
        for (auto kind : {SublatticeKind::PRIMAL, SublatticeKind::DUAL}) {
            const auto &s = lat.sublattice(kind);
            ASSERT_EQ(s.num_cells, L * L * L);
            std::vector<int> seen(s.num_qubits(), 0);
            for (uint32_t c = 0; c < s.num_cells; c++) {
                std::set<uint32_t> faces(s.cell_qubits[c].begin(), s.cell_qubits[c].end());
                ASSERT_EQ(faces.size(), 6u);
                for (uint32_t q : faces) {
                    seen[q]++;
                    const auto &cells = s.qubit_cells[q];
                    ASSERT_TRUE(cells[0] == c || cells[1] == c);
                }
            }
            for (uint32_t q = 0; q < s.num_qubits(); q++) {
                ASSERT_EQ(seen[q], 2) << "qubit " << q;
                ASSERT_NE(s.qubit_cells[q][0], s.qubit_cells[q][1]);
            }
        }
        // Each qubit has four bonds; each bond has one endpoint on each side.
        std::vector<int> primal_deg(lat.num_primal_qubits(), 0);
        std::vector<int> dual_deg(lat.num_dual_qubits(), 0);
        std::set<std::pair<uint32_t, uint32_t>> unique;
        for (uint32_t b = 0; b < lat.num_bonds(); b++) {
            primal_deg[lat.bonds()[b].primal]++;
            dual_deg[lat.bonds()[b].dual]++;
            unique.insert({lat.bonds()[b].primal, lat.bonds()[b].dual});
            ASSERT_EQ(b / 4, lat.bonds()[b].primal);
        }
        ASSERT_EQ(unique.size(), lat.num_bonds());
        for (int d : primal_deg) ASSERT_EQ(d, 4);
        for (int d : dual_deg) ASSERT_EQ(d, 4);
        for (uint32_t q = 0; q < lat.num_dual_qubits(); q++) {
            for (uint32_t b : lat.dual_qubit_bonds(q)) {
                ASSERT_EQ(lat.bonds()[b].dual, q);
            }
        }
    }
}

TEST(cluster_lattice, faces_of_a_dual_cell_touch_its_vertex) {
    // Every primal face bonded to a dual qubit of dual cell v contains v as a corner, and each such face
    // carries exactly two of v's edges: the cell stabilizer Z factors cancel in pairs.
    auto lat = build_lattice(4);
    const auto &dual = lat.dual();
    for (uint32_t v = 0; v < dual.num_cells; v++) {
        std::map<uint32_t, int> face_count;
        for (uint32_t e : dual.cell_qubits[v]) {
            for (uint32_t b : lat.dual_qubit_bonds(e)) {
                face_count[lat.bonds()[b].primal]++;
            }
        }
        for (auto [f, k] : face_count) {
            ASSERT_EQ(k, 2) << "vertex " << v << " face " << f;
        }
    }
    const auto &primal = lat.primal();
    for (uint32_t c = 0; c < primal.num_cells; c++) {
        std::map<uint32_t, int> edge_count;
        for (uint32_t f : primal.cell_qubits[c]) {
            for (uint32_t b : lat.primal_qubit_bonds(f)) {
                edge_count[lat.bonds()[b].dual]++;
            }
        }
        ASSERT_EQ(edge_count.size(), 12u);
        for (auto [e, k] : edge_count) {
            ASSERT_EQ(k, 2);
        }
    }
}

TEST(cluster_lattice, cut_planes) {
    auto lat = build_lattice(4);
    for (auto kind : {SublatticeKind::PRIMAL, SublatticeKind::DUAL}) {
        const auto &s = lat.sublattice(kind);
        int per_axis[3] = {0, 0, 0};
        for (uint32_t q = 0; q < s.num_qubits(); q++) {
            int a = s.qubit_cut_axis[q];
            if (a >= 0) {
                ASSERT_EQ((uint32_t)a, q % 3);
                per_axis[a]++;
            }
        }
        for (int a = 0; a < 3; a++) {
            ASSERT_EQ(per_axis[a], 16);
        }
    }
}

TEST(cluster_lattice, deterministic_build) {
    auto a = build_lattice(3);
    auto b = build_lattice(3);
    ASSERT_EQ(a.primal().qubit_cells, b.primal().qubit_cells);
    ASSERT_EQ(a.dual().cell_qubits, b.dual().cell_qubits);
    for (uint32_t k = 0; k < a.num_bonds(); k++) {
        ASSERT_EQ(a.bonds()[k].dual, b.bonds()[k].dual);
    }
}
