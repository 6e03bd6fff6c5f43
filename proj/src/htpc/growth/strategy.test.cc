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


#include "htpc/growth/strategy.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace htpc;

namespace {

GrowthStrategy make(StrategyKind kind, uint32_t depth, uint32_t N = 1, uint32_t branching = 2) {
    GrowthStrategy s;
    s.kind = kind;
    s.depth = depth;
    s.attempts_N = N;
    s.branching = branching;
    return s;
}

}  // namespace

TEST(strategy, names_round_trip) {
    for (auto k : {StrategyKind::STAR, StrategyKind::CROSS, StrategyKind::SNOWFLAKE}) {
        EXPECT_EQ(strategy_from_name(strategy_name(k)), k);
    }
    for (auto k : {EOKind::AUTO, EOKind::CONTROL_PHASE, EOKind::PARITY_PROJECTION}) {
        EXPECT_EQ(eo_kind_from_name(eo_kind_name(k)), k);
    }
    EXPECT_THROW(strategy_from_name("hexagon"), std::invalid_argument);
    EXPECT_THROW(memory_model_from_name("amnesia"), std::invalid_argument);
}

TEST(strategy, sizes_and_supply) {
    EXPECT_EQ(resource_size(make(StrategyKind::STAR, 5)), 32u);
    EXPECT_EQ(leaves_per_direction(make(StrategyKind::STAR, 5)), 7u);
    EXPECT_EQ(resource_size(make(StrategyKind::SNOWFLAKE, 7)), 512u);
    EXPECT_EQ(leaves_per_direction(make(StrategyKind::SNOWFLAKE, 7)), 64u);
    EXPECT_EQ(resource_size(make(StrategyKind::SNOWFLAKE, 3, 1, 3)), 108u);
    EXPECT_EQ(leaves_per_direction(make(StrategyKind::SNOWFLAKE, 3, 1, 3)), 18u);
    EXPECT_EQ(resource_size(make(StrategyKind::CROSS, 4)), 64u);
    EXPECT_EQ(leaves_per_direction(make(StrategyKind::CROSS, 4)), 15u);
}

TEST(strategy, growth_rounds_for_doubling) {
    for (uint32_t k = 1; k <= 10; k++) {
        auto recipe = growth_recipe(make(StrategyKind::STAR, k));
        EXPECT_EQ(recipe.size(), k);
        EXPECT_EQ(resource_size(make(StrategyKind::STAR, k)), 1u << k);
    }
    EXPECT_EQ(growth_recipe(make(StrategyKind::SNOWFLAKE, 6)).size(), 8u);
}

TEST(strategy, validation) {
    EXPECT_NO_THROW(make(StrategyKind::SNOWFLAKE, 7, 64).validate());
    EXPECT_THROW(make(StrategyKind::SNOWFLAKE, 7, 65).validate(), std::invalid_argument);
    EXPECT_THROW(make(StrategyKind::STAR, 2, 1).validate(), std::invalid_argument);
    EXPECT_THROW(make(StrategyKind::SNOWFLAKE, 0, 1).validate(), std::invalid_argument);
    EXPECT_THROW(make(StrategyKind::SNOWFLAKE, 2, 0).validate(), std::invalid_argument);
    EXPECT_THROW(make(StrategyKind::SNOWFLAKE, 2, 1, 1).validate(), std::invalid_argument);
    EXPECT_THROW(make(StrategyKind::CROSS, 2, 1, 3).validate(), std::invalid_argument);
    EOModel eo{1.2, 0, 0};
    EXPECT_THROW(eo.validate(), std::invalid_argument);
}

TEST(expected_cost, closed_forms) {
    // Doubling with abandonment: each round multiplies the cost by 2 / p_s.
    EXPECT_NEAR(expected_cost(make(StrategyKind::STAR, 2), 0.5), 16.0, 1e-12);
    EXPECT_NEAR(expected_cost(make(StrategyKind::STAR, 6), 0.0), 64.0, 1e-12);
    EXPECT_NEAR(expected_cost(make(StrategyKind::SNOWFLAKE, 3), 0.2), std::pow(2 / 0.8, 5), 1e-9);
    // A three-way link needs two successes in a row.
    EXPECT_NEAR(expected_cost(make(StrategyKind::SNOWFLAKE, 1, 1, 3), 0.5), 3 / 0.25 * 4 / 0.25, 1e-9);
    EXPECT_THROW(expected_cost(make(StrategyKind::STAR, 3), 1.0), std::domain_error);
    EXPECT_THROW(expected_cost(make(StrategyKind::STAR, 3), -0.1), std::invalid_argument);
}

TEST(required_resource_size, smallest_attempt_count) {
    for (double p_h : {0.3, 0.5, 0.9, 0.95, 0.98}) {
        for (double target : {0.2, 0.05, 0.01, 0.001}) {
            auto req = required_resource_size(StrategyKind::SNOWFLAKE, p_h, target);
            EXPECT_LE(std::pow(p_h, req.attempts_N), target * (1 + 1e-12));
            if (req.attempts_N > 1) {
                EXPECT_GT(std::pow(p_h, req.attempts_N - 1), target);
            }
            EXPECT_GE(req.leaves_per_direction, req.attempts_N);
            EXPECT_EQ(req.total_qubits, 4ull << req.depth);
        }
    }
    auto req = required_resource_size(StrategyKind::SNOWFLAKE, 0.98, 0.01);
    EXPECT_EQ(req.attempts_N, 228u);
    EXPECT_EQ(req.depth, 9u);
    EXPECT_EQ(req.total_qubits, 2048u);
    EXPECT_EQ(attempts_for_target(0.5, 0.125), 3u);
    EXPECT_EQ(attempts_for_target(0.0, 0.01), 1u);
}

TEST(required_resource_size, rejects_bad_target) {
    EXPECT_THROW(required_resource_size(StrategyKind::STAR, 0.9, 0.0), std::invalid_argument);
    EXPECT_THROW(required_resource_size(StrategyKind::STAR, 0.9, 1.0), std::invalid_argument);
    EXPECT_THROW(required_resource_size(StrategyKind::STAR, 1.0, 0.1), std::domain_error);
}
