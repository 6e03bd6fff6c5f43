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


#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "htpc/driver/csv.h"
#include "json.hpp"

using namespace htpc;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("htpc_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }

    int run(const std::string &args, const std::string &env = "") {
        std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" HTPC_CLI_PATH "' " + args +
                          " > stdout.txt 2> stderr.txt";
        int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }
    std::string file(const std::string &name) {
        return read_file((dir_ / name).string());
    }
    void put(const std::string &name, const std::string &content) {
        std::ofstream(dir_ / name) << content;
    }
    bool exists(const std::string &name) {
        return fs::exists(dir_ / name);
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, verify_passes_and_prints_lines) {
    EXPECT_EQ(run("verify --out v.csv"), 0);
    auto out = file("stdout.txt");
    EXPECT_NE(out.find("PASS"), std::string::npos);
    EXPECT_EQ(out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, minimal_config_file_is_echoed) {
    put("c.json", R"({"p_h": 0.9, "target": 0.01})");
    ASSERT_EQ(run("resource-size --config c.json --out r.csv"), 0);
    auto meta = nlohmann::json::parse(file("r.csv.meta.json"));
    EXPECT_EQ(meta["config"]["p_h"], nlohmann::json::array({0.9}));
    EXPECT_EQ(meta["status"], "complete");
    EXPECT_TRUE(meta.contains("wall_time_s"));
    EXPECT_TRUE(meta.contains("version"));
    EXPECT_NE(file("r.csv").find("snowflake,0.9,0.01,44,"), std::string::npos);
}

TEST_F(Cli, resource_size_at_high_p_h_is_large) {
    ASSERT_EQ(run("resource-size --ph 0.98 --target 0.01 --out r.csv"), 0);
    auto text = file("r.csv");
    EXPECT_NE(text.find(",2048,"), std::string::npos) << text;
}

TEST_F(Cli, out_of_range_probability_exits_2) {
    EXPECT_EQ(run("grow --p_G -0.1 --out g.csv"), 2);
    EXPECT_NE(file("stderr.txt").find("p_G"), std::string::npos);
    EXPECT_FALSE(exists("g.csv"));
    put("c.json", R"({"p_G": -0.1})");
    EXPECT_EQ(run("grow --config c.json --out g.csv"), 2);
}

TEST_F(Cli, malformed_files_name_the_problem) {
    put("bad.json", "{\"trials\": ");
    EXPECT_EQ(run("lattice-sweep --config bad.json"), 2);
    put("typed.json", R"({"trials": "many"})");
    EXPECT_EQ(run("lattice-sweep --config typed.json"), 2);
    EXPECT_NE(file("stderr.txt").find("'trials'"), std::string::npos);
    put("unknown.json", R"({"trails": 5})");
    EXPECT_EQ(run("lattice-sweep --config unknown.json"), 2);
    EXPECT_NE(file("stderr.txt").find("'trails'"), std::string::npos);
    EXPECT_EQ(run("lattice-sweep --config missing.json"), 2);
    EXPECT_EQ(run("no-such-command"), 2);
    EXPECT_EQ(run("lattice-sweep --trials 0"), 2);
}

TEST_F(Cli, runtime_failure_exits_1_and_marks_metadata) {
    put("region.csv", "not,a,region\n");
    EXPECT_EQ(run("phase-diagram --region region.csv --out p.csv --traces 2"), 1);
    EXPECT_FALSE(exists("p.csv"));
    auto meta = nlohmann::json::parse(file("p.csv.meta.json"));
    EXPECT_EQ(meta["status"], "failed");
}

TEST_F(Cli, flags_override_file_values) {
    put("c.json", R"({"trials": 50, "L": [4], "p_err": [0.02]})");
    ASSERT_EQ(run("lattice-sweep --config c.json --trials 100 --out s.csv"), 0);
    auto rows = parse_sweep_csv(file("s.csv"));
    ASSERT_EQ(rows.rows.size(), 1u);
    EXPECT_EQ(rows.rows[0].trials, 100u);
}

TEST_F(Cli, empty_sweep_is_header_only_and_one_point_is_two_lines) {
    ASSERT_EQ(run("lattice-sweep --p_err '' --out e.csv"), 0);
    EXPECT_EQ(file("e.csv"), std::string(kSweepHeader) + "\n");
    ASSERT_EQ(run("lattice-sweep --L 4 --p_err 0.01 --trials 20 --out one.csv"), 0);
    auto text = file("one.csv");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}

TEST_F(Cli, sweep_is_deterministic_and_round_trips) {
    std::string args = "lattice-sweep --L 4,6 --p_loss 0.1 --p_err 0.01,0.02 --trials 100 --seed 3";
    ASSERT_EQ(run(args + " --workers 1 --out a.csv"), 0);
    ASSERT_EQ(run(args + " --out b.csv", "HERALD_TPC_WORKERS=3"), 0);
    EXPECT_EQ(file("a.csv"), file("b.csv"));
    auto meta = nlohmann::json::parse(file("b.csv.meta.json"));
    EXPECT_EQ(meta["config"]["workers"], 3);
    EXPECT_EQ(sweep_csv(parse_sweep_csv(file("a.csv"))), file("a.csv"));
}

TEST_F(Cli, grow_and_phase_outputs_round_trip) {
    ASSERT_EQ(run("grow --ph 0.5 --traces 4 --cost_samples 50 --out g.csv"), 0);
    EXPECT_EQ(grow_csv(parse_grow_csv(file("g.csv"))), file("g.csv"));
    put("r.csv", "p_loss,p_err_max,ci,seed\n0,0.029,0,0\n0.249,0,0,0\n");
    ASSERT_EQ(run("phase-diagram --ph 0.5 --target 0.1,0.01 --traces 4 --region r.csv --out p.csv"), 0);
    auto rows = parse_phase_csv(file("p.csv"));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_GT(rows[0].p_G_max, 0);
    EXPECT_EQ(phase_csv(rows), file("p.csv"));
}

TEST_F(Cli, help_exits_0) {
    EXPECT_EQ(run("--help"), 0);
    EXPECT_EQ(run("lattice-sweep --help"), 0);
}
