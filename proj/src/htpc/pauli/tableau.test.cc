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


#include "htpc/pauli/tableau.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "htpc/pauli/state_vector.test_util.h"

using namespace htpc;

namespace {

const Gate kAllGates[] = {Gate::H, Gate::S, Gate::S_DAG, Gate::X, Gate::Y, Gate::Z, Gate::CZ, Gate::CX};

Gate random_gate(std::mt19937_64 &rng) {
    return kAllGates[rng() % 8];
}

PauliString random_hermitian(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, "IXYZ"[rng() & 3]);
    }
    p.phase = (rng() & 1) ? 2 : 0;
    return p;
}

void apply_both(StabilizerTableau &t, StateVector &sv, Gate g, uint32_t a, uint32_t b) {
    t.apply_gate(g, a, b);
    sv.apply_gate(g, a, b);
}

void random_step(StabilizerTableau &t, StateVector &sv, std::mt19937_64 &rng) {
    size_t n = t.num_qubits();
    Gate g = random_gate(rng);
    uint32_t a = rng() % n;
    uint32_t b = rng() % n;
    if (gate_is_two_qubit(g)) {
        if (n < 2) {
            g = Gate::H;
        } else {
            while (b == a) {
                b = rng() % n;
            }
        }
    }
    apply_both(t, sv, g, a, b);
}

}  // namespace

TEST(tableau, gate_names) {
    for (Gate g : kAllGates) {
        ASSERT_EQ(gate_from_name(gate_name(g)), g);
    }
    ASSERT_EQ(gate_from_name("CNOT"), Gate::CX);
    ASSERT_THROW(gate_from_name("T"), std::invalid_argument);
    ASSERT_THROW(gate_from_name("CCZ"), std::invalid_argument);
}

TEST(tableau, cz_conjugation) {
    auto p = PauliString::from_str("XI");
    conjugate_by_gate(p, Gate::CZ, 0, 1);
    ASSERT_EQ(p, PauliString::from_str("XZ"));
    auto z = PauliString::from_str("ZI");
    conjugate_by_gate(z, Gate::CZ, 0, 1);
    ASSERT_EQ(z, PauliString::from_str("ZI"));
}

TEST(tableau, conjugation_matches_state_vector_on_all_two_qubit_paulis) {
    for (Gate g : kAllGates) {
        for (int code = 0; code < 16; code++) {
            PauliString p(2);
            p.set(0, "IXYZ"[code & 3]);
            p.set(1, "IXYZ"[code >> 2]);
            auto q = p;
            conjugate_by_gate(q, g, 0, 1);
            // U P U^dag |psi> == Q |psi> on a handful of basis-rotated states.
            for (int basis = 0; basis < 16; basis++) {
                StateVector s(2);
                if (basis & 1) s.apply_gate(Gate::H, 0);
                if (basis & 2) s.apply_gate(Gate::S, 0);
                if (basis & 4) s.apply_gate(Gate::H, 1);
                if (basis & 8) s.apply_gate(Gate::CX, 0, 1);
                // Compare <psi| U P U^dag |psi> with <psi|Q|psi> by checking all expectations on
                // U^dag |psi>: expectation of P on U^dag psi equals expectation of Q on psi.
                StateVector u = s;
                // U^dag: every gate here is self-inverse except S / S_DAG.
                Gate inv = g == Gate::S ? Gate::S_DAG : g == Gate::S_DAG ? Gate::S : g;
                u.apply_gate(inv, 0, 1);
                ASSERT_NEAR(u.expectation(p), s.expectation(q), 1e-9)
                    << gate_name(g) << " on " << p.str() << " -> " << q.str();
            }
        }
    }
}

TEST(tableau, double_cz_is_identity) {
    StabilizerTableau t(3);
    t.apply_gate(Gate::H, 0);
    t.apply_gate(Gate::H, 1);
    t.apply_gate(Gate::S, 2);
    auto before = t.stabilizers();
    t.apply_gate(Gate::CZ, 0, 1);
    t.apply_gate(Gate::CZ, 0, 1);
    ASSERT_EQ(t.stabilizers(), before);
}

TEST(tableau, value_forms) {
    StabilizerTableau t(2);
    uint32_t q0[] = {0};
    auto t2 = apply_gate(t, Gate::H, q0);
    ASSERT_EQ(t2.stabilizers()[0], PauliString::from_str("XI"));
    ASSERT_EQ(t.stabilizers()[0], PauliString::from_str("ZI"));
    std::mt19937_64 rng(1);
    auto [outcome, t3] = measure_pauli(t2, PauliString::from_str("XI"), rng);
    ASSERT_EQ(outcome, +1);
    ASSERT_EQ(t3.stabilizers(), t2.stabilizers());
}

TEST(tableau, measure_generator_is_deterministic) {
    StabilizerTableau t(2);
    t.apply_gate(Gate::H, 0);
    t.apply_gate(Gate::H, 1);
    t.apply_gate(Gate::CZ, 0, 1);
    std::mt19937_64 rng(3);
    auto before = t.stabilizers();
    auto r = t.measure_pauli(PauliString::from_str("XZ"), rng);
    ASSERT_TRUE(r.deterministic);
    ASSERT_EQ(r.outcome, +1);
    ASSERT_EQ(t.stabilizers(), before);
    ASSERT_EQ(t.peek_expectation(PauliString::from_str("-ZX")), -1);
}

TEST(tableau, z_on_plus_is_fair) {
    std::mt19937_64 rng(7);
    int plus = 0;
    int shots = 10000;
    for (int k = 0; k < shots; k++) {
        StabilizerTableau t(1);
        t.apply_gate(Gate::H, 0);
        auto r = t.measure_pauli(PauliString::from_str("Z"), rng);
        ASSERT_FALSE(r.deterministic);
        plus += r.outcome > 0;
    }
    ASSERT_NEAR(plus, shots / 2, 3 * std::sqrt(shots * 0.25));
}

TEST(tableau, xx_on_cluster_pair_matches_state_vector) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; k++) {
        StabilizerTableau t(2);
        StateVector sv(2);
        apply_both(t, sv, Gate::H, 0, 0);
        apply_both(t, sv, Gate::H, 1, 0);
        apply_both(t, sv, Gate::CZ, 0, 1);
        auto xx = PauliString::from_str("XX");
        ASSERT_EQ(t.peek_expectation(xx), 0);
        auto r = t.measure_pauli(xx, rng);
        ASSERT_FALSE(r.deterministic);
        double prob = sv.project(xx, r.outcome);
        ASSERT_NEAR(prob, 0.5, 1e-9);
        PauliString signed_xx = xx;
        signed_xx.phase = r.outcome > 0 ? 0 : 2;
        ASSERT_EQ(t.peek_expectation(signed_xx), +1);
        ASSERT_NEAR(sv.expectation(signed_xx), 1.0, 1e-9);
    }
}

TEST(tableau, invariants_and_expectations_match_state_vector) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng() % 4;
        StabilizerTableau t(n);
        StateVector sv(n);
        for (int step = 0; step < 30; step++) {
            if (rng() % 4 == 0) {
                auto p = random_hermitian(n, rng);
                double e = sv.expectation(p);
                auto r = t.measure_pauli(p, rng);
                if (std::abs(e) > 0.5) {
                    ASSERT_TRUE(r.deterministic);
                    ASSERT_EQ(r.outcome, e > 0 ? 1 : -1);
                } else {
                    ASSERT_FALSE(r.deterministic);
                }
                double prob = sv.project(p, r.outcome);
                ASSERT_GT(prob, 0.49);
            } else {
                random_step(t, sv, rng);
            }
            ASSERT_TRUE(t.generators_commute());
            ASSERT_EQ(t.stabilizer_rank(), n);
            auto probe = random_hermitian(n, rng);
            double e = sv.expectation(probe);
            int peek = t.peek_expectation(probe);
            ASSERT_NEAR(e, (double)peek, 1e-9) << probe.str();
        }
    }
}

TEST(tableau, outcome_distribution_matches_state_vector) {
    std::mt19937_64 rng(29);
    for (int instance = 0; instance < 6; instance++) {
        size_t n = 2 + instance % 3;
        StabilizerTableau base(n);
        StateVector sv(n);
        for (int step = 0; step < 20; step++) {
            random_step(base, sv, rng);
        }
        // Sample two successive measurements and compare the joint distribution.
        auto p1 = random_hermitian(n, rng);
        auto p2 = random_hermitian(n, rng);
        std::array<double, 4> expected{};
        for (int a = 0; a < 2; a++) {
            StateVector s1 = sv;
            double pa = s1.project(p1, a ? -1 : 1);
            for (int b = 0; b < 2; b++) {
                StateVector s2 = s1;
                double pb = pa > 1e-12 ? s2.project(p2, b ? -1 : 1) : 0;
                expected[2 * a + b] = pa * pb;
            }
        }
        std::array<int, 4> counts{};
        int shots = 10000;
        for (int k = 0; k < shots; k++) {
            StabilizerTableau t = base;
            int a = t.measure_pauli(p1, rng).outcome < 0;
            int b = t.measure_pauli(p2, rng).outcome < 0;
            counts[2 * a + b]++;
        }
        for (int c = 0; c < 4; c++) {
            double mean = shots * expected[c];
            double sigma = std::sqrt(shots * expected[c] * (1 - expected[c]));
            ASSERT_LE(std::abs(counts[c] - mean), 3 * sigma + 1e-9) << "instance " << instance << " cell " << c;
        }
    }
}

TEST(tableau, reset_plus) {
    std::mt19937_64 rng(31);
    StabilizerTableau t(3);
    t.apply_gate(Gate::H, 0);
    t.apply_gate(Gate::CX, 0, 1);
    t.apply_gate(Gate::CX, 1, 2);
    t.reset_plus(1, rng);
    ASSERT_EQ(t.peek_expectation(PauliString::from_str("IXI")), 1);
    ASSERT_EQ(t.peek_expectation(PauliString::from_str("ZIZ")), 1);
    ASSERT_TRUE(t.generators_commute());
    ASSERT_EQ(t.stabilizer_rank(), 3u);
}

TEST(tableau, out_of_range_qubit) {
    StabilizerTableau t(2);
    ASSERT_THROW(t.apply_gate(Gate::H, 2), std::out_of_range);
    ASSERT_THROW(t.apply_gate(Gate::CZ, 1, 1), std::invalid_argument);
}
