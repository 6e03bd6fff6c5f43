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


#include "htpc/threshold/crossing.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace htpc;

namespace {

SizeCurve synthetic(uint32_t L, const std::vector<double> &grid, double pc, uint64_t trials) {
    SizeCurve c{L, {}};
    for (double p : grid) {
        double f = 0.5 * (1 + std::tanh(0.5 * L * (p - pc) / pc * 4));
        c.points.push_back({p, (uint64_t)std::llround(f * trials), trials});
    }
    return c;
}

}  // namespace

TEST(estimate_crossing, recovers_constructed_crossing) {
    std::vector<double> grid{0.02, 0.025, 0.028, 0.032, 0.036, 0.04};
    auto est = estimate_crossing({synthetic(4, grid, 0.03, 100000), synthetic(6, grid, 0.03, 100000),
                                  synthetic(8, grid, 0.03, 100000)});
    ASSERT_EQ(est.pairs.size(), 2u);
    EXPECT_NEAR(est.threshold, 0.03, 0.004);
    for (const auto &pc : est.pairs) {
        EXPECT_GE(pc.crossing, 0.028);
        EXPECT_LE(pc.crossing, 0.032);
        EXPECT_LE(pc.ci_low, pc.crossing);
        EXPECT_GE(pc.ci_high, pc.crossing);
    }
    EXPECT_GE(est.uncertainty, 0);
    EXPECT_TRUE(est.pairs_consistent());
}

TEST(estimate_crossing, exact_on_grid_point) {
    std::vector<double> grid{0.01, 0.02, 0.03, 0.04, 0.05};
    auto est = estimate_crossing({synthetic(4, grid, 0.03, 1000000), synthetic(8, grid, 0.03, 1000000)});
    EXPECT_NEAR(est.threshold, 0.03, 1e-9);
}

TEST(estimate_crossing, no_sign_change_throws) {
    std::vector<double> grid{0.01, 0.015, 0.02};
    EXPECT_THROW(estimate_crossing({synthetic(4, grid, 0.03, 10000), synthetic(8, grid, 0.03, 10000)}),
                 NoCrossingError);
}

TEST(estimate_crossing, rejects_malformed_inputs) {
    std::vector<double> grid{0.01, 0.03, 0.05};
    EXPECT_THROW(estimate_crossing({synthetic(4, grid, 0.03, 100)}), std::invalid_argument);
    std::vector<double> two{0.01, 0.05};
    EXPECT_THROW(estimate_crossing({synthetic(4, two, 0.03, 100), synthetic(6, two, 0.03, 100)}),
                 std::invalid_argument);
    EXPECT_THROW(estimate_crossing({synthetic(4, grid, 0.03, 100), synthetic(6, {0.01, 0.02, 0.05}, 0.03, 100)}),
                 std::invalid_argument);
}

TEST(curves_from_sweep, groups_rows_by_size) {
    SweepResult r;
    for (double pl : {0.1, 0.2, 0.3}) {
        for (uint32_t L : {4u, 6u}) {
            SweepRow row;
            row.point.p_loss = pl;
            row.L = L;
            row.trials = 10;
            row.failures = L == 4 ? 5 : (pl < 0.2 ? 2 : 8);
            r.rows.push_back(row);
        }
    }
    auto curves = curves_from_sweep(r, SweepAxis::P_LOSS);
    ASSERT_EQ(curves.size(), 2u);
    EXPECT_EQ(curves[1].L, 6u);
    ASSERT_EQ(curves[1].points.size(), 3u);
    EXPECT_DOUBLE_EQ(curves[1].points[2].p, 0.3);
    auto est = estimate_crossing(curves);
    EXPECT_GT(est.threshold, 0.1);
    EXPECT_LT(est.threshold, 0.2);
}
