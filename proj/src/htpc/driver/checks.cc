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


#include "htpc/driver/checks.h"

#include <random>
#include <sstream>

#include "htpc/decoder/matching.h"
#include "htpc/lattice/cluster_lattice.h"
#include "htpc/pauli/pauli_string.h"
#include "htpc/pauli/supercheck_identity.h"
#include "htpc/pauli/tableau.h"

namespace htpc {

namespace {

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, "IXYZ"[rng() & 3]);
    }
    p.phase = rng() & 3;
    return p;
}

bool anticommute_by_count(const PauliString &a, const PauliString &b) {
    size_t count = 0;
    for (size_t q = 0; q < a.num_qubits; q++) {
        char x = a.get(q), y = b.get(q);
        count += x != 'I' && y != 'I' && x != y;
    }
    return count & 1;
}

}  // namespace

std::vector<CheckResult> check_pauli_algebra(uint64_t seed) {
    std::vector<CheckResult> out;
    {
        auto p = pauli_multiply(PauliString::from_str("XI"), PauliString::from_str("ZI"));
        out.push_back({"X*Z = -iY", p == PauliString::from_str("-iYI"), p.str()});
    }
    {
        auto p = pauli_multiply(PauliString::from_str("Z"), PauliString::from_str("X"));
        out.push_back({"Z*X = iY", p == PauliString::from_str("iY"), p.str()});
    }
    {
        bool ok = commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")) &&
                  !commutes(PauliString::from_str("XI"), PauliString::from_str("ZI"));
        out.push_back({"commutation of XX/ZZ and X/Z", ok, ""});
    }
    {
        auto p = PauliString::from_str("XI");
        conjugate_by_gate(p, Gate::CZ, 0, 1);
        auto h = PauliString::from_str("Y");
        conjugate_by_gate(h, Gate::H, 0);
        bool ok = p == PauliString::from_str("XZ") && h == PauliString::from_str("-Y");
        out.push_back({"CZ and H conjugation", ok, p.str() + " " + h.str()});
    }
    {
        std::mt19937_64 rng(seed);
        bool assoc = true, comm = true;
        for (int t = 0; t < 500 && assoc && comm; t++) {
            size_t n = 1 + rng() % 16;
            auto a = random_pauli(n, rng), b = random_pauli(n, rng), c = random_pauli(n, rng);
            assoc = pauli_multiply(pauli_multiply(a, b), c) == pauli_multiply(a, pauli_multiply(b, c));
            comm = commutes(a, b) == !anticommute_by_count(a, b) && commutes(a, b) == commutes(b, a);
        }
        out.push_back({"random associativity (500 triples, n <= 16)", assoc, ""});
        out.push_back({"random commutation vs overlap parity", comm, ""});
    }
    {
        StabilizerTableau t(2);
        std::mt19937_64 rng(seed);
        t.apply_gate(Gate::H, 0);
        t.apply_gate(Gate::CX, 0, 1);
        int zz = t.peek_expectation(PauliString::from_str("ZZ"));
        int xx = t.peek_expectation(PauliString::from_str("XX"));
        int zi = t.peek_expectation(PauliString::from_str("ZI"));
        out.push_back({"Bell state expectations", zz == 1 && xx == 1 && zi == 0, ""});
    }
    return out;
}

CheckResult check_all_missing_bonds(const std::vector<uint32_t> &sizes) {
    CheckResult r{"supercheck identity for every single missing bond", true, ""};
    std::ostringstream detail;
    size_t total = 0;
    for (uint32_t L : sizes) {
        ClusterLattice lat(L);
        if (!verify_supercheck_identity(lat, std::nullopt)) {
            r.passed = false;
            detail << "intact L=" << L << " failed; ";
        }
        for (uint32_t b = 0; b < lat.bonds().size(); b++) {
            auto rep = check_supercheck_identity(lat, b);
            total++;
            if (!rep.ok()) {
                r.passed = false;
                detail << "L=" << L << " bond " << b << ": " << rep.detail << "; ";
            }
        }
    }
    detail << total << " bonds checked";
    r.detail = detail.str();
    return r;
}

CheckResult check_matching_exactness(uint32_t instances, uint32_t max_vertices, uint64_t seed) {
    std::mt19937_64 rng(seed);
    uint32_t mismatches = 0;
    for (uint32_t t = 0; t < instances; t++) {
        size_t n = 2 * (1 + rng() % (max_vertices / 2));
        WeightMatrix g(n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                g.set(i, j, (int64_t)(rng() % 21));
            }
        }
        auto a = mwpm(g);
        auto b = brute_force_matching(g);
        mismatches += !is_perfect(a, n) || a.weight != b.weight;
    }
    return {"mwpm weight equals brute force", mismatches == 0,
            std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace htpc
