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


#ifndef HTPC_DRIVER_CSV_H
#define HTPC_DRIVER_CSV_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "htpc/threshold/phase.h"
#include "htpc/threshold/region.h"
#include "htpc/threshold/sweep.h"

namespace htpc {

inline constexpr std::string_view kSweepHeader = "p_h,p_G,p_M,p_bond,p_loss,p_err,L,trials,failures,fail_rate,ci_low,ci_high,seed";
inline constexpr std::string_view kRegionHeader = "p_loss,p_err_max,ci,seed";
inline constexpr std::string_view kPhaseHeader = "strategy,p_h,p_G_max,attempts_N,resource_qubits,seed";
inline constexpr std::string_view kGrowHeader =
    "strategy,p_h,p_G,p_M,mean_cost,cost_ci,p_x,p_z,p_corr_same,p_corr_cross,bond_missing,seed";
inline constexpr std::string_view kResourceHeader =
    "strategy,p_h,target,attempts_N,depth,leaves_per_direction,total_qubits,bond_missing,expected_cost";

/// Nine significant digits, as printf("%.9g").
std::string format_double(double v);

struct GrowRow {
    std::string strategy;
    double p_h = 0, p_G = 0, p_M = 0;
    double mean_cost = 0, cost_ci = 0;
    double p_x = 0, p_z = 0, p_corr_same = 0, p_corr_cross = 0, bond_missing = 0;
    uint64_t seed = 0;
};

struct ResourceRow {
    std::string strategy;
    double p_h = 0, target = 0;
    uint64_t attempts_N = 0, depth = 0, leaves_per_direction = 0, total_qubits = 0;
    double bond_missing = 0, expected_cost = 0;
};

struct PhaseRow {
    std::string strategy;
    double p_h = 0, p_G_max = 0;
    uint64_t attempts_N = 0, resource_qubits = 0, seed = 0;
};

std::string sweep_csv(const SweepResult &r);
std::string region_csv(const CorrectableRegion &r);
std::string phase_csv(const std::vector<PhaseRow> &rows);
std::string grow_csv(const std::vector<GrowRow> &rows);
std::string resource_csv(const std::vector<ResourceRow> &rows);

std::vector<PhaseRow> phase_rows(const PhaseDiagramResult &r);

/// Parsers for the formats above. They require the exact header and throw std::runtime_error
/// naming the line on malformed input. Flagged region rows come back with NaN p_err_max.
SweepResult parse_sweep_csv(const std::string &text);
std::vector<RegionPoint> parse_region_csv(const std::string &text, uint64_t *seed = nullptr);
std::vector<PhaseRow> parse_phase_csv(const std::string &text);
std::vector<GrowRow> parse_grow_csv(const std::string &text);

std::string read_file(const std::string &path);
/// Writes `path` via a temporary file and rename.
void write_file(const std::string &path, const std::string &content);

}  // namespace htpc

#endif
