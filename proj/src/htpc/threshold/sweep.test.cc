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


#include "htpc/threshold/sweep.h"

#include <gtest/gtest.h>

#include "htpc/threshold/crossing.h"

using namespace htpc;

namespace {

SweepConfig small_sweep(uint32_t workers) {
    SweepConfig cfg;
    cfg.sizes = {4, 6};
    for (double pe : {0.01, 0.03}) {
        SweepPoint p;
        p.p_err = pe;
        p.p_loss = 0.05;
        cfg.points.push_back(p);
    }
    cfg.trials = 150;
    cfg.seed = 42;
    cfg.workers = workers;
    return cfg;
}

}  // namespace

TEST(run_sweep, rows_are_point_major_with_wilson_intervals) {
    auto r = run_sweep(small_sweep(1));
    ASSERT_EQ(r.rows.size(), 4u);
    EXPECT_EQ(r.rows[0].L, 4u);
    EXPECT_EQ(r.rows[1].L, 6u);
    EXPECT_EQ(r.rows[2].point.p_err, 0.03);
    for (const auto &row : r.rows) {
        EXPECT_LE(row.failures, row.trials);
        EXPECT_DOUBLE_EQ(row.fail_rate, (double)row.failures / row.trials);
        EXPECT_LE(row.ci_low, row.fail_rate);
        EXPECT_GE(row.ci_high, row.fail_rate);
    }
}

TEST(run_sweep, counts_do_not_depend_on_worker_count) {
    auto a = run_sweep(small_sweep(1));
    auto b = run_sweep(small_sweep(3));
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (size_t i = 0; i < a.rows.size(); i++) {
        EXPECT_EQ(a.rows[i].failures, b.rows[i].failures);
        EXPECT_EQ(a.rows[i].seed, b.rows[i].seed);
    }
}

TEST(run_sweep, noiseless_points_never_fail) {
    SweepConfig cfg;
    cfg.sizes = {3, 4, 5};
    cfg.points = {SweepPoint{}};
    cfg.trials = 50;
    for (const auto &row : run_sweep(cfg).rows) {
        EXPECT_EQ(row.failures, 0u);
    }
}

TEST(run_sweep, far_above_threshold_fails_often) {
    SweepConfig cfg;
    cfg.sizes = {6};
    SweepPoint p;
    p.p_err = 0.10;
    cfg.points = {p};
    cfg.trials = 1000;
    cfg.seed = 5;
    EXPECT_GT(run_sweep(cfg).rows[0].fail_rate, 0.3);
}

TEST(run_sweep, rejects_bad_configs) {
    SweepConfig cfg = small_sweep(1);
    cfg.trials = 0;
    EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
    cfg = small_sweep(1);
    cfg.sizes = {1};
    EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
    cfg = small_sweep(1);
    cfg.points[0].p_err = 1.5;
    EXPECT_THROW(run_sweep(cfg), std::invalid_argument);
}

TEST(run_sweep, empty_grid_gives_no_rows) {
    SweepConfig cfg = small_sweep(1);
    cfg.points.clear();
    EXPECT_TRUE(run_sweep(cfg).rows.empty());
}

TEST(run_sweep, failure_rate_grows_with_error_rate) {
    SweepConfig cfg;
    cfg.sizes = {6};
    for (double pe : {0.01, 0.03, 0.06}) {
        SweepPoint p;
        p.p_err = pe;
        cfg.points.push_back(p);
    }
    cfg.trials = 400;
    cfg.seed = 9;
    auto r = run_sweep(cfg);
    EXPECT_LT(r.rows[0].ci_high, r.rows[2].ci_low);
    EXPECT_LE(r.rows[0].fail_rate, r.rows[1].fail_rate);
    EXPECT_LE(r.rows[1].fail_rate, r.rows[2].fail_rate);
}
