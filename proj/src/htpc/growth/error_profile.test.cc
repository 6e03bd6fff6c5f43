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


#include "htpc/growth/error_profile.h"

#include <gtest/gtest.h>

#include <cmath>

#include "htpc/growth/graph_builder.h"
#include "htpc/growth/resource.h"
#include "htpc/growth/sensitivity.h"
#include "htpc/pauli/tableau.h"

using namespace htpc;

namespace {

GrowthStrategy make(StrategyKind kind, uint32_t depth, uint32_t N, EOKind eo = EOKind::AUTO) {
    GrowthStrategy s;
    s.kind = kind;
    s.depth = depth;
    s.attempts_N = N;
    s.fusion_eo = eo;
    return s;
}

PauliString fault_at(const Circuit &c, const Op &op, uint8_t pa, uint8_t pb) {
    PauliString f(c.num_qubits());
    f.set_x(op.q0, pa & 1);
    f.set_z(op.q0, pa & 2);
    if (op.type == OpType::NOISE2) {
        f.set_x(op.q1, pb & 1);
        f.set_z(op.q1, pb & 2);
    }
    return f;
}

uint32_t observed_flips(const PauliString &residual, const std::vector<Observable> &obs) {
    uint32_t m = 0;
    for (size_t i = 0; i < obs.size(); i++) {
        bool bit = obs[i].component == 'Z' ? residual.z(obs[i].qubit) : residual.x(obs[i].qubit);
        m |= (uint32_t)bit << i;
    }
    return m;
}

/// Compares every (site, Pauli) of the backward pass against forward propagation of that fault.
void expect_backward_matches_forward(const Circuit &c, const std::vector<Observable> &obs) {
    auto sites = backward_sensitivity(c, obs);
    size_t expected_sites = 0;
    for (const auto &op : c.ops()) {
        expected_sites += op.type == OpType::NOISE1 || op.type == OpType::NOISE2 || op.type == OpType::IDLE;
    }
    ASSERT_EQ(sites.size(), expected_sites);
    for (const auto &site : sites) {
        const Op &op = c.ops()[site.op_index];
        uint8_t max_b = op.type == OpType::NOISE2 ? 4 : 1;
        for (uint8_t pb = 0; pb < max_b; pb++) {
            for (uint8_t pa = 0; pa < 4; pa++) {
                if (pa == 0 && pb == 0) {
                    continue;
                }
                auto prop = propagate_error(c, site.op_index, fault_at(c, op, pa, pb));
                ASSERT_EQ(site.flips(pa, pb), observed_flips(prop.residual, obs))
                    << "op " << site.op_index << " pauli " << (int)pa << "," << (int)pb;
            }
        }
    }
}

}  // namespace

TEST(backward_sensitivity, reference_fusion_of_two_linear_clusters) {
    // a0-a1-a2 and b0-b1-b2, fused by a parity projection on the end qubits a2, b2.
    GraphCircuitBuilder b(6);
    for (uint32_t q = 0; q < 6; q++) {
        b.prepare(q);
    }
    b.end_tick();
    b.cz(0, 1);
    b.cz(1, 2);
    b.cz(3, 4);
    b.cz(4, 5);
    b.end_tick();
    b.fuse_parity(2, 5);
    b.end_tick();
    b.finish();
    std::vector<std::vector<uint32_t>> want_line = {{1}, {0, 2}, {1, 4}, {4}, {3, 2}, {}};
    for (uint32_t q = 0; q < 5; q++) {
        auto got = b.neighbors(q);
        std::sort(got.begin(), got.end());
        auto want = want_line[q];
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << q;
    }
    const Circuit &c = b.circuit();
    for (uint64_t seed = 0; seed < 16; seed++) {
        std::mt19937_64 rng(seed);
        StabilizerTableau t(6);
        run_on_tableau(c, t, rng);
        for (uint32_t v = 0; v < 5; v++) {
            PauliString k(6);
            k.set(v, 'X');
            for (uint32_t w : b.neighbors(v)) {
                k.set(w, 'Z');
            }
            ASSERT_EQ(t.peek_expectation(k), 1);
        }
    }
    std::vector<Observable> obs;
    for (uint32_t q = 0; q < 5; q++) {
        obs.push_back({q, 'X'});
        obs.push_back({q, 'Z'});
    }
    expect_backward_matches_forward(c, obs);
    // Every single fault leaves some residual or flips nothing; with no later ops, a fault on the
    // merged vertex right before the X readout of b2 reaches exactly vertex 2.
    auto sites = backward_sensitivity(c, obs);
    bool found = false;
    for (const auto &s : sites) {
        const Op &op = c.ops()[s.op_index];
        if (op.type == OpType::NOISE1 && op.q0 == 5) {
            found = true;
            EXPECT_EQ(s.flips(2), 1u << 5);  // Z on b2 flips its X outcome: Z correction on vertex 2.
            EXPECT_EQ(s.flips(1), 0u);
        }
    }
    EXPECT_TRUE(found);
}

TEST(backward_sensitivity, matches_forward_on_node_windows) {
    std::mt19937_64 rng(5);
    for (auto s : {make(StrategyKind::SNOWFLAKE, 2, 2), make(StrategyKind::CROSS, 2, 3, EOKind::CONTROL_PHASE),
                   make(StrategyKind::STAR, 3, 1)}) {
        auto trace = sample_window_trace(s.attempts_N, 0.5, rng);
        auto w = fuse_and_prune_node(s, trace);
        std::vector<Observable> obs;
        for (uint32_t c : w.cores) {
            obs.push_back({c, 'Z'});
            obs.push_back({c, 'X'});
        }
        expect_backward_matches_forward(w.circuit, obs);
    }
}

TEST(backward_sensitivity, rejects_measured_observable) {
    Circuit c(2);
    c.prepare_plus(0);
    c.measure(0, 'X');
    std::vector<Observable> obs{{0, 'Z'}};
    EXPECT_THROW(backward_sensitivity(c, obs), std::invalid_argument);
    std::vector<Observable> bad{{1, 'Y'}};
    EXPECT_THROW(backward_sensitivity(c, bad), std::invalid_argument);
}

TEST(single_fault, star_resource_marginals_bounded_by_operation_count) {
    // Exhaustive single-fault enumeration on a 4-qubit star with no heralded failures.
    auto rc = build_resource_circuit(make(StrategyKind::STAR, 2, 1));
    const Circuit &c = rc.circuit;
    const double p_G = 1e-3;
    uint32_t n = c.num_qubits();
    std::vector<double> marginal(n, 0);
    std::vector<uint32_t> touching(n, 0);
    for (const auto &op : c.ops()) {
        if (op.type == OpType::TICK) {
            continue;
        }
        if (op.type == OpType::FEEDFORWARD) {
            for (const auto &t : c.feedforward_targets(op)) {
                touching[t.qubit]++;
            }
            continue;
        }
        touching[op.q0]++;
        if (op.type == OpType::NOISE2 || op.type == OpType::MEASURE_ZZ ||
            (op.type == OpType::GATE && gate_is_two_qubit(op.gate))) {
            touching[op.q1]++;
        }
    }
    for (size_t k = 0; k < c.ops().size(); k++) {
        const Op &op = c.ops()[k];
        if (op.type != OpType::NOISE1 && op.type != OpType::NOISE2) {
            continue;
        }
        double choices = op.type == OpType::NOISE2 ? 15 : 3;
        uint8_t max_b = op.type == OpType::NOISE2 ? 4 : 1;
        for (uint8_t pb = 0; pb < max_b; pb++) {
            for (uint8_t pa = 0; pa < 4; pa++) {
                if (pa == 0 && pb == 0) {
                    continue;
                }
                auto prop = propagate_error(c, k, fault_at(c, op, pa, pb));
                for (uint32_t q = 0; q < n; q++) {
                    if (prop.residual.x(q) || prop.residual.z(q)) {
                        marginal[q] += p_G / choices;
                    }
                }
            }
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        EXPECT_GE(marginal[q], p_G * (1 - 1e-12)) << q;
        EXPECT_LE(marginal[q], touching[q] * p_G) << q;
    }
}

TEST(error_profile, zero_noise_gives_zero_errors) {
    EOModel eo{0.6, 0.0, 0.0};
    auto prof = estimate_error_profile(make(StrategyKind::SNOWFLAKE, 3, 4), eo, 10, 1);
    EXPECT_EQ(prof.p_x, 0.0);
    EXPECT_EQ(prof.p_z, 0.0);
    EXPECT_EQ(prof.p_corr_same, 0.0);
    EXPECT_EQ(prof.p_corr_cross, 0.0);
}

TEST(error_profile, monotone_in_gate_and_memory_noise) {
    auto model = build_profile_model(make(StrategyKind::SNOWFLAKE, 3, 4), 0.5, MemoryModel::DEPHASING, 20, 3);
    double prev = 0;
    for (double p_G : {1e-5, 1e-4, 1e-3, 1e-2}) {
        double pz = model.p_z(p_G, 0);
        EXPECT_GT(pz, prev);
        EXPECT_GT(model.p_z(p_G, p_G), pz);
        prev = pz;
    }
    auto prof = model.evaluate(1e-3, 0);
    EXPECT_LE(prof.p_z_ci_low, prof.p_z);
    EXPECT_GE(prof.p_z_ci_high, prof.p_z);
    EXPECT_EQ(prof.traces, 20u);
}

TEST(error_profile, exact_and_sampled_methods_agree) {
    auto s = make(StrategyKind::SNOWFLAKE, 2, 2);
    for (auto memory : {MemoryModel::DEPHASING, MemoryModel::DEPOLARIZING}) {
        EOModel eo{0.4, 0.0006, 0.0003, memory};
        auto exact = estimate_error_profile(s, eo, 16, 77, ProfileMethod::EXACT);
        auto sampled = estimate_error_profile(s, eo, 16, 77, ProfileMethod::SAMPLED, 12000);
        EXPECT_GT(exact.p_z, 0.005);
        double n = 16 * 12000.0;
        double sz = std::sqrt(exact.p_z * (1 - exact.p_z) / n);
        double sx = std::sqrt(exact.p_x * (1 - exact.p_x) / n);
        EXPECT_NEAR(sampled.p_z, exact.p_z, 4 * sz);
        EXPECT_NEAR(sampled.p_x, exact.p_x, 4 * sx + 1e-9);
        EXPECT_LE(sampled.p_z_ci_low, exact.p_z + 2 * sz);
        EXPECT_GE(sampled.p_z_ci_high, exact.p_z - 2 * sz);
        EXPECT_DOUBLE_EQ(sampled.bond_missing, exact.bond_missing);
        // First-order correlated rates agree with sampled ones up to higher-order terms.
        double sc = std::sqrt(exact.p_corr_cross / n);
        EXPECT_NEAR(sampled.p_corr_cross, exact.p_corr_cross, 4 * sc + 0.15 * exact.p_corr_cross);
        double ss = std::sqrt((exact.p_corr_same + 1e-4) / n);
        EXPECT_NEAR(sampled.p_corr_same, exact.p_corr_same, 4 * ss + 0.15 * exact.p_corr_same);
    }
}

TEST(error_profile, odd_flip_probability_formula) {
    std::array<std::array<uint64_t, 16>, 3> hist{};
    hist[SITE_GATE1][2] = 1;
    EXPECT_NEAR(odd_flip_probability(hist, 0.3, 0, MemoryModel::DEPHASING), 0.2, 1e-12);
    hist[SITE_GATE1][2] = 2;
    EXPECT_NEAR(odd_flip_probability(hist, 0.3, 0, MemoryModel::DEPHASING), 2 * 0.2 * 0.8, 1e-12);
    hist = {};
    hist[SITE_MEMORY][1] = 3;
    double q = 0.1;
    EXPECT_NEAR(odd_flip_probability(hist, 0, q, MemoryModel::DEPHASING),
                3 * q * (1 - q) * (1 - q) + q * q * q, 1e-12);
}

TEST(error_profile, bad_inputs) {
    EOModel eo{0.5, 0.001, 0};
    EXPECT_THROW(estimate_error_profile(make(StrategyKind::SNOWFLAKE, 1, 4), eo, 4, 1), std::invalid_argument);
    EXPECT_THROW(estimate_error_profile(make(StrategyKind::SNOWFLAKE, 2, 2), eo, 0, 1), std::invalid_argument);
    EXPECT_THROW(estimate_error_profile(make(StrategyKind::SNOWFLAKE, 2, 2), EOModel{0.5, -1, 0}, 4, 1),
                 std::invalid_argument);
    EXPECT_EQ(profile_method_from_name("sampled"), ProfileMethod::SAMPLED);
}
