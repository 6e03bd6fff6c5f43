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


#ifndef HTPC_THRESHOLD_PHASE_H
#define HTPC_THRESHOLD_PHASE_H

#include <cstdint>
#include <string>
#include <vector>

#include "htpc/growth/strategy.h"
#include "htpc/threshold/region.h"

namespace htpc {

struct PhaseConfig {
    StrategyKind strategy = StrategyKind::SNOWFLAKE;
    std::vector<double> p_h_grid{0.9};
    /// Bond-failure targets; each maps to the smallest N with p_h^N <= target.
    std::vector<double> bond_fail_targets{0.3, 0.2, 0.1, 0.05, 0.03, 0.02, 0.01, 0.005, 0.002, 0.001, 0.0005};
    std::vector<uint32_t> branchings{2};
    /// Depths tried beyond the minimum one that supplies N attempt qubits.
    uint32_t extra_depth = 1;
    uint64_t max_resource_qubits = 1u << 14;
    uint32_t traces = 48;
    MemoryModel memory = MemoryModel::DEPHASING;
    /// p_M = memory_ratio * p_G.
    double memory_ratio = 0;
    double p_G_lo = 1e-7;
    double p_G_hi = 0.1;
    uint32_t bisection_steps = 40;
    uint64_t seed = 0;
    uint32_t workers = 1;

    void validate() const;
};

struct PhasePoint {
    double p_h = 0;
    /// Largest feasible p_G; 0 when nothing is feasible.
    double p_G_max = 0;
    uint32_t attempts_N = 0;
    uint32_t depth = 0;
    uint32_t branching = 0;
    uint64_t resource_qubits = 0;
    /// Induced qubit loss and effective error at the optimum.
    double p_loss = 0;
    double p_err = 0;
    bool feasible = false;
    std::string diagnostics;
    uint64_t seed = 0;
};

struct PhaseDiagramResult {
    StrategyKind strategy = StrategyKind::SNOWFLAKE;
    double memory_ratio = 0;
    std::vector<PhasePoint> points;
};

/// A lattice qubit is lost unless all four bonds of its node are present.
double induced_qubit_loss(double bond_missing);

/// For each p_h, the supremum p_G such that some (N, depth, branching) candidate maps into the
/// correctable region with margin. The per-candidate profile is monotone in p_G, so bisection per
/// candidate followed by a maximum gives a downward-closed feasible set.
PhaseDiagramResult phase_boundary(const PhaseConfig &cfg, const CorrectableRegion &region);

/// phase_boundary with p_M = ratio * p_G.
PhaseDiagramResult memory_effect(PhaseConfig cfg, const CorrectableRegion &region, double ratio);

/// Whether some candidate at grid value p_h accepts p_G.
bool phase_feasible(const PhaseConfig &cfg, const CorrectableRegion &region, double p_h, double p_G);

}  // namespace htpc

#endif
