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


#include "htpc/pauli/pauli_string.h"

#include <random>

#include "gtest/gtest.h"

using namespace htpc;

namespace {

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, "IXYZ"[rng() & 3]);
    }
    p.phase = rng() & 3;
    return p;
}

}  // namespace

TEST(pauli_string, from_str_round_trip) {
    auto p = PauliString::from_str("-XZ_Y");
    ASSERT_EQ(p.num_qubits, 4u);
    ASSERT_EQ(p.get(0), 'X');
    ASSERT_EQ(p.get(1), 'Z');
    ASSERT_EQ(p.get(2), 'I');
    ASSERT_EQ(p.get(3), 'Y');
    ASSERT_TRUE(p.sign_negative());
    ASSERT_EQ(PauliString::from_str(p.str()), p);
    ASSERT_EQ(PauliString::from_str("+iZ").phase, 1);
    ASSERT_EQ(PauliString::from_str("-iZ").phase, 3);
}

TEST(pauli_string, x_times_z_is_minus_i_y) {
    auto x = PauliString::from_str("XI");
    auto z = PauliString::from_str("ZI");
    auto r = pauli_multiply(x, z);
    ASSERT_TRUE(r.x(0));
    ASSERT_TRUE(r.z(0));
    ASSERT_EQ(r.phase, 3);
    ASSERT_EQ(r.get(1), 'I');
    ASSERT_EQ(pauli_multiply(z, x).phase, 1);
}

TEST(pauli_string, single_qubit_products) {
    ASSERT_EQ(pauli_multiply(PauliString::from_str("X"), PauliString::from_str("Y")), PauliString::from_str("iZ"));
    ASSERT_EQ(pauli_multiply(PauliString::from_str("Y"), PauliString::from_str("Z")), PauliString::from_str("iX"));
    ASSERT_EQ(pauli_multiply(PauliString::from_str("Z"), PauliString::from_str("X")), PauliString::from_str("iY"));
    ASSERT_EQ(pauli_multiply(PauliString::from_str("Y"), PauliString::from_str("Y")), PauliString::from_str("I"));
}

TEST(pauli_string, identity_is_neutral) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; k++) {
        auto p = random_pauli(7, rng);
        PauliString id(7);
        ASSERT_EQ(pauli_multiply(p, id), p);
        ASSERT_EQ(pauli_multiply(id, p), p);
    }
}

TEST(pauli_string, dimension_mismatch_throws) {
    ASSERT_THROW(pauli_multiply(PauliString(2), PauliString(3)), std::invalid_argument);
    ASSERT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(pauli_string, associative_on_random_triples) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2000; k++) {
        size_t n = 1 + rng() % 16;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        auto c = random_pauli(n, rng);
        ASSERT_EQ(pauli_multiply(pauli_multiply(a, b), c), pauli_multiply(a, pauli_multiply(b, c)));
    }
}

TEST(pauli_string, commutes_matches_symplectic_product) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 10000; k++) {
        size_t n = 1 + rng() % 16;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        int s = 0;
        for (size_t q = 0; q < n; q++) {
            s ^= (a.x(q) & b.z(q)) ^ (a.z(q) & b.x(q));
        }
        ASSERT_EQ(commutes(a, b), s == 0);
        // ab = +-ba, with the sign given by the symplectic product.
        auto ab = pauli_multiply(a, b);
        auto ba = pauli_multiply(b, a);
        ASSERT_TRUE(ab.same_support_and_axes(ba));
        ASSERT_EQ((ab.phase - ba.phase) & 3, s ? 2 : 0);
    }
}

TEST(pauli_string, anticommuting_pair) {
    ASSERT_FALSE(commutes(PauliString::from_str("X"), PauliString::from_str("Z")));
    ASSERT_TRUE(commutes(PauliString::from_str("XZ"), PauliString::from_str("ZX")));
    ASSERT_TRUE(commutes(PauliString(3), PauliString::from_str("XYZ")));
}

TEST(pauli_string, damaged_check_product_drops_lost_pair) {
    // Qubits 0..5: i=0, j=1, then two disjoint face sets for the two cells sharing face i.
    auto p1 = PauliString::from_str("XIXXII");
    auto p2 = PauliString::from_str("XIIIXX");
    auto hat1 = pauli_multiply(p1, PauliString::from_str("IZIIII"));
    auto hat2 = pauli_multiply(p2, PauliString::from_str("IZIIII"));
    auto tilde = pauli_multiply(hat1, hat2);
    ASSERT_EQ(tilde.get(0), 'I');
    ASSERT_EQ(tilde.get(1), 'I');
    ASSERT_EQ(tilde, pauli_multiply(p1, p2));
}

TEST(pauli_string, weight_and_words) {
    PauliString p(130);
    p.set(0, 'X');
    p.set(64, 'Y');
    p.set(129, 'Z');
    ASSERT_EQ(p.weight(), 3u);
    ASSERT_EQ(p.get(129), 'Z');
    p.clear(64);
    ASSERT_EQ(p.weight(), 2u);
}
