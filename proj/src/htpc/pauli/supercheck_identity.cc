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


#include "htpc/pauli/supercheck_identity.h"

#include <sstream>
#include <stdexcept>

#include "htpc/pauli/tableau.h"

namespace htpc {

namespace {

struct SideView {
    SublatticeKind kind;
    const Sublattice *sub;
    uint32_t offset;
    /// Tableau index of the far endpoint of the missing bond, if this side has a lost qubit.
    std::optional<uint32_t> lost_local;
    std::optional<uint32_t> opposite_global;
};

}  // namespace

SupercheckReport check_supercheck_identity(const ClusterLattice &lat, std::optional<uint32_t> missing_bond) {
    if (missing_bond && *missing_bond >= lat.num_bonds()) {
        throw std::out_of_range("bond " + std::to_string(*missing_bond) + " out of range (" +
                                std::to_string(lat.num_bonds()) + " bonds)");
    }
    uint32_t np = lat.num_primal_qubits();
    uint32_t n = np + lat.num_dual_qubits();
    StabilizerTableau t(n);
    for (uint32_t q = 0; q < n; q++) {
        t.apply_gate(Gate::H, q);
    }
    for (uint32_t b = 0; b < lat.num_bonds(); b++) {
        if (missing_bond && b == *missing_bond) {
            continue;
        }
        t.apply_gate(Gate::CZ, lat.bonds()[b].primal, np + lat.bonds()[b].dual);
    }
    // With no measurements applied, stabilizer row q is the graph-state generator of qubit q.
    const auto &rows = t.stabilizers();

    SideView sides[2] = {
        {SublatticeKind::PRIMAL, &lat.primal(), 0, {}, {}},
        {SublatticeKind::DUAL, &lat.dual(), np, {}, {}},
    };
    if (missing_bond) {
        const Bond &bond = lat.bonds()[*missing_bond];
        sides[0].lost_local = bond.primal;
        sides[0].opposite_global = np + bond.dual;
        sides[1].lost_local = bond.dual;
        sides[1].opposite_global = bond.primal;
    }

    SupercheckReport report;
    std::ostringstream detail;
    for (const SideView &side : sides) {
        const Sublattice &s = *side.sub;
        std::vector<PauliString> damaged(s.num_cells, PauliString(n));
        for (uint32_t c = 0; c < s.num_cells; c++) {
            PauliString ideal(n);
            PauliString product(n);
            bool touches_lost = false;
            for (uint32_t q : s.cell_qubits[c]) {
                ideal.set(side.offset + q, 'X');
                product *= rows[side.offset + q];
                touches_lost |= side.lost_local && q == *side.lost_local;
            }
            PauliString expected = ideal;
            if (touches_lost) {
                expected *= PauliString::single(n, *side.opposite_global, 'Z');
            }
            report.cells_checked++;
            if (product != expected) {
                report.damaged_checks_ok = false;
                detail << (side.kind == SublatticeKind::PRIMAL ? "primal" : "dual") << " cell " << c
                       << " check mismatch; ";
            }
            if (t.peek_expectation(expected) != 1) {
                report.damaged_checks_ok = false;
                detail << "cell " << c << " check not stabilized; ";
            }
            if (touches_lost && t.peek_expectation(ideal) == 1) {
                report.damaged_checks_ok = false;
                detail << "cell " << c << " ideal check survived the missing bond; ";
            }
            damaged[c] = std::move(product);
        }
        if (side.lost_local) {
            uint32_t lost = *side.lost_local;
            uint32_t c1 = s.qubit_cells[lost][0];
            uint32_t c2 = s.qubit_cells[lost][1];
            PauliString super_check = pauli_multiply(damaged[c1], damaged[c2]);
            uint32_t i = side.offset + lost;
            uint32_t j = *side.opposite_global;
            bool clean = !super_check.x(i) && !super_check.z(i) && !super_check.x(j) && !super_check.z(j);
            PauliString ideal_product(n);
            for (uint32_t c : {c1, c2}) {
                for (uint32_t q : s.cell_qubits[c]) {
                    ideal_product *= PauliString::single(n, side.offset + q, 'X');
                }
            }
            if (!clean || super_check != ideal_product || t.peek_expectation(super_check) != 1) {
                report.superchecks_ok = false;
                detail << "supercheck around qubit " << lost << " has support on the lost pair; ";
            }
        }
    }
    report.detail = detail.str();
    return report;
}

}  // namespace htpc
