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


#include "htpc/threshold/phase.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace htpc;

namespace {

CorrectableRegion toy_region() {
    return region_from_points({{0, 0.029, 0, false}, {0.249, 0, 0, false}}, 0.03, 0.2);
}

PhaseConfig toy_config() {
    PhaseConfig cfg;
    cfg.strategy = StrategyKind::STAR;
    cfg.p_h_grid = {0.0, 0.3};
    cfg.bond_fail_targets = {0.1, 0.01};
    cfg.extra_depth = 0;
    cfg.traces = 6;
    cfg.seed = 17;
    return cfg;
}

}  // namespace

TEST(induced_qubit_loss, four_bonds_per_node) {
    EXPECT_DOUBLE_EQ(induced_qubit_loss(0), 0);
    EXPECT_NEAR(induced_qubit_loss(0.1), 1 - std::pow(0.9, 4), 1e-15);
}

TEST(phase_boundary, feasible_set_is_downward_closed) {
    auto cfg = toy_config();
    auto region = toy_region();
    auto r = phase_boundary(cfg, region);
    ASSERT_EQ(r.points.size(), 2u);
    for (const auto &pt : r.points) {
        ASSERT_TRUE(pt.feasible) << pt.diagnostics;
        EXPECT_GT(pt.p_G_max, 1e-5);
        EXPECT_LT(pt.p_G_max, 1e-2);
        EXPECT_GE(pt.attempts_N, 1u);
        EXPECT_GT(pt.resource_qubits, 0u);
        for (double f : {0.999, 0.5, 0.1, 0.01}) {
            EXPECT_TRUE(phase_feasible(cfg, region, pt.p_h, pt.p_G_max * f)) << f;
        }
        EXPECT_FALSE(phase_feasible(cfg, region, pt.p_h, pt.p_G_max * 1.01));
    }
}

TEST(phase_boundary, no_heralded_failures_needs_one_attempt) {
    auto r = phase_boundary(toy_config(), toy_region());
    EXPECT_EQ(r.points[0].attempts_N, 1u);
    EXPECT_DOUBLE_EQ(r.points[0].p_loss, 0);
    EXPECT_LE(r.points[0].p_err * 1.2, toy_region().boundary(0.03) * (1 + 1e-9));
}

TEST(phase_boundary, infeasible_reports_zero_with_diagnostics) {
    auto region = region_from_points({{0, 0.029, 0, false}, {0.01, 0, 0, false}}, 0.03, 0.2);
    auto r = phase_boundary(toy_config(), region);
    for (const auto &pt : r.points) {
        EXPECT_FALSE(pt.feasible);
        EXPECT_EQ(pt.p_G_max, 0);
        EXPECT_FALSE(pt.diagnostics.empty());
    }
}

TEST(memory_effect, ratio_zero_matches_and_boundary_shrinks_with_ratio) {
    auto cfg = toy_config();
    cfg.p_h_grid = {0.3};
    auto region = toy_region();
    auto base = phase_boundary(cfg, region);
    auto r0 = memory_effect(cfg, region, 0);
    EXPECT_EQ(base.points[0].p_G_max, r0.points[0].p_G_max);
    EXPECT_EQ(base.points[0].attempts_N, r0.points[0].attempts_N);
    auto r1 = memory_effect(cfg, region, 0.1);
    auto r5 = memory_effect(cfg, region, 0.5);
    EXPECT_LE(r1.points[0].p_G_max, r0.points[0].p_G_max);
    EXPECT_LE(r5.points[0].p_G_max, r1.points[0].p_G_max);
    EXPECT_LT(r5.points[0].p_G_max, r0.points[0].p_G_max);
    EXPECT_THROW(memory_effect(cfg, region, -1), std::invalid_argument);
}

TEST(phase_boundary, rejects_bad_config) {
    auto cfg = toy_config();
    cfg.p_h_grid = {1.0};
    EXPECT_THROW(phase_boundary(cfg, toy_region()), std::invalid_argument);
    cfg = toy_config();
    cfg.bond_fail_targets = {};
    EXPECT_THROW(phase_boundary(cfg, toy_region()), std::invalid_argument);
}
