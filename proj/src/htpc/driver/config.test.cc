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


#include "htpc/driver/config.h"

#include <gtest/gtest.h>

using namespace htpc;
using nlohmann::json;

TEST(resolve_config, defaults_file_then_flags) {
    auto cfg = resolve_config("lattice-sweep", json{{"trials", 50}, {"p_err", {0.01, 0.02}}}, {{"trials", "100"}});
    EXPECT_EQ(cfg.integer("trials"), 100);
    EXPECT_EQ(cfg.numbers("p_err"), (std::vector<double>{0.01, 0.02}));
    EXPECT_EQ(cfg.integers("L"), (std::vector<int64_t>{4, 6, 8}));
    EXPECT_EQ(cfg.out, "lattice-sweep.csv");
}

TEST(resolve_config, scalars_become_lists_and_aliases_resolve) {
    auto cfg = resolve_config("resource-size", json{{"ph", 0.9}}, {{"targets", "0.01,0.001"}});
    EXPECT_EQ(cfg.numbers("p_h"), std::vector<double>{0.9});
    EXPECT_EQ(cfg.numbers("target").size(), 2u);
}

TEST(resolve_config, workers_fallback_order) {
    EXPECT_EQ(resolve_config("verify", json::object(), {}, "").workers, 1u);
    EXPECT_EQ(resolve_config("verify", json::object(), {}, "4").workers, 4u);
    EXPECT_EQ(resolve_config("verify", json::object(), {{"workers", "2"}}, "4").workers, 2u);
    EXPECT_THROW(resolve_config("verify", json::object(), {}, "zero"), ConfigError);
}

TEST(resolve_config, memory_ratio_default_depends_on_command) {
    EXPECT_EQ(resolve_config("phase-diagram", json::object(), {}).number("memory_ratio"), 0);
    EXPECT_EQ(resolve_config("memory-effect", json::object(), {}).number("memory_ratio"), 0.1);
}

TEST(resolve_config, rejects_and_names_bad_keys) {
    auto expect_error = [](const std::string &cmd, const json &file, std::map<std::string, std::string> flags,
                           const std::string &needle) {
        try {
            resolve_config(cmd, file, flags);
            ADD_FAILURE() << "no error for " << needle;
        } catch (const ConfigError &e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    expect_error("grow", json{{"p_G", -0.1}}, {}, "p_G");
    expect_error("grow", json::object(), {{"p_M", "1.5"}}, "p_M");
    expect_error("lattice-sweep", json{{"p_err", {0.1, 0.7}}}, {}, "p_err");
    expect_error("lattice-sweep", json{{"trials", 0}}, {}, "trials");
    expect_error("lattice-sweep", json{{"trials", 1.5}}, {}, "trials");
    expect_error("lattice-sweep", json{{"bogus", 1}}, {}, "bogus");
    expect_error("lattice-sweep", json::object(), {{"L", "4,x"}}, "L");
    expect_error("verify", json::object(), {{"trials", "5"}}, "trials");
    expect_error("nope", json::object(), {}, "nope");
    expect_error("grow", json::array(), {}, "object");
    expect_error("grow", json{{"seed", -1}}, {}, "seed");
}

TEST(resolve_config, keys_for_other_commands_are_ignored_in_files) {
    auto cfg = resolve_config("verify", json{{"trials", 5}}, {});
    EXPECT_FALSE(cfg.has("trials"));
}

TEST(resolve_config, large_seeds_survive) {
    auto cfg = resolve_config("verify", json::object(), {{"seed", "18446744073709551615"}});
    EXPECT_EQ(cfg.seed, 18446744073709551615ull);
}
