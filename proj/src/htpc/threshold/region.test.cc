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


#include "htpc/threshold/region.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace htpc;

TEST(isotonic_nonincreasing, pools_violators) {
    auto v = isotonic_nonincreasing({3, 1, 2, 0});
    ASSERT_EQ(v.size(), 4u);
    EXPECT_DOUBLE_EQ(v[0], 3);
    EXPECT_DOUBLE_EQ(v[1], 1.5);
    EXPECT_DOUBLE_EQ(v[2], 1.5);
    EXPECT_DOUBLE_EQ(v[3], 0);
    auto same = isotonic_nonincreasing({5, 4, 4, 1});
    EXPECT_EQ(same, (std::vector<double>{5, 4, 4, 1}));
}

TEST(CorrectableRegion, interpolates_and_applies_margin) {
    auto region = region_from_points({{0, 0.03, 0, false}, {0.1, 0.02, 0, false}, {0.25, 0, 0, false}}, 0.03, 0.2);
    EXPECT_DOUBLE_EQ(region.boundary(0), 0.03);
    EXPECT_NEAR(region.boundary(0.05), 0.025, 1e-12);
    EXPECT_DOUBLE_EQ(region.boundary(0.3), 0);
    EXPECT_DOUBLE_EQ(region.loss_threshold(), 0.25);
    EXPECT_TRUE(region.contains_with_margin(0, 0.02));
    EXPECT_FALSE(region.contains_with_margin(0, 0.0245));
    EXPECT_FALSE(region.contains_with_margin(0.23, 0));
}

TEST(CorrectableRegion, flagged_points_are_skipped_and_pav_applied) {
    auto region = region_from_points(
        {{0, 0.03, 0, false}, {0.05, NAN, 0, true}, {0.1, 0.01, 0, false}, {0.15, 0.012, 0, false}, {0.25, 0, 0, false}},
        0.05, 0.2);
    EXPECT_TRUE(region.points[1].flagged);
    EXPECT_DOUBLE_EQ(region.points[2].p_err_max, 0.011);
    EXPECT_DOUBLE_EQ(region.points[3].p_err_max, 0.011);
    EXPECT_NEAR(region.boundary(0.05), 0.0205, 1e-12);
}

TEST(correctable_region, small_scan_is_monotone_with_loss_endpoint) {
    RegionConfig cfg;
    cfg.sizes = {4, 6};
    cfg.loss_rows = {0.0, 0.1};
    cfg.endpoint_sizes = {4, 6};
    cfg.endpoint_grid = {0.15, 0.2, 0.25, 0.3, 0.35};
    cfg.trials = 150;
    cfg.endpoint_trials = 300;
    cfg.seed = 11;
    auto region = correctable_region(cfg);
    ASSERT_EQ(region.points.size(), 3u);
    EXPECT_EQ(region.points.back().p_err_max, 0);
    EXPECT_GT(region.loss_threshold(), 0.15);
    EXPECT_LT(region.loss_threshold(), 0.35);
    double prev = INFINITY;
    for (const auto &pt : region.points) {
        if (pt.flagged) continue;
        EXPECT_LE(pt.p_err_max, prev);
        prev = pt.p_err_max;
    }
    EXPECT_DOUBLE_EQ(region.loss_cell, 0.1);
}

TEST(correctable_region, rejects_bad_config) {
    RegionConfig cfg;
    cfg.sizes = {6};
    EXPECT_THROW(correctable_region(cfg), std::invalid_argument);
    cfg = RegionConfig{};
    cfg.factors = {1.0, 0.5, 2.0};
    EXPECT_THROW(correctable_region(cfg), std::invalid_argument);
}
