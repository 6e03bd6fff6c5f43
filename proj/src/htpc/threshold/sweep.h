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


#ifndef HTPC_THRESHOLD_SWEEP_H
#define HTPC_THRESHOLD_SWEEP_H

#include <cstdint>
#include <vector>

namespace htpc {

/// One lattice-level parameter point. p_h, p_G, p_M are carried along for reporting when the point
/// was derived from a growth model (zero otherwise).
struct SweepPoint {
    double p_h = 0;
    double p_G = 0;
    double p_M = 0;
    double p_bond = 0;
    double p_loss = 0;
    double p_err = 0;
};

struct SweepConfig {
    std::vector<uint32_t> sizes;
    std::vector<SweepPoint> points;
    uint64_t trials = 1000;
    uint64_t seed = 0;
    uint32_t workers = 1;
    bool simulate_dual = false;

    /// Throws std::invalid_argument on sizes < 2, trials or workers < 1, or probabilities outside
    /// their ranges.
    void validate() const;
};

struct SweepRow {
    SweepPoint point;
    uint32_t L = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double fail_rate = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t seed = 0;
};

/// Rows in grid order: point-major, then size in the order given.
struct SweepResult {
    std::vector<SweepRow> rows;
};

/// Trial t of point i at size index j uses the seed derive_seed(seed, {i, j, t}), so the counts do
/// not depend on the number of workers.
SweepResult run_sweep(const SweepConfig &cfg);

/// Failure counts at a single (point, size), for callers that build their own grids.
uint64_t count_failures(uint32_t L, const SweepPoint &p, uint64_t trials, uint64_t seed, uint64_t point_index,
                        uint64_t size_index, uint32_t workers, bool simulate_dual = false);

}  // namespace htpc

#endif
