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


#ifndef HTPC_THRESHOLD_REGION_H
#define HTPC_THRESHOLD_REGION_H

#include <cstdint>
#include <vector>

namespace htpc {

struct RegionConfig {
    /// Lattice sizes compared at each (p_loss, p_err).
    std::vector<uint32_t> sizes{6, 10};
    std::vector<double> loss_rows{0.0, 0.03, 0.06, 0.09, 0.12, 0.15, 0.18, 0.21};
    /// Each row scans p_err = prior(p_loss) * factor, with a linear prior between the two
    /// single-noise thresholds below.
    std::vector<double> factors{0.4, 0.55, 0.7, 0.85, 1.0, 1.2, 1.45, 1.75};
    double prior_err_threshold = 0.029;
    double prior_loss_threshold = 0.249;
    /// Loss-only endpoint (p_err = 0) scan.
    std::vector<uint32_t> endpoint_sizes{8, 12};
    std::vector<double> endpoint_grid{0.22, 0.235, 0.25, 0.265, 0.28};
    uint64_t trials = 1000;
    uint64_t endpoint_trials = 2000;
    /// Extra grid points tried past either end when a row shows no crossing.
    uint32_t max_extensions = 3;
    uint64_t seed = 0;
    uint32_t workers = 1;

    void validate() const;
};

struct RegionPoint {
    double p_loss = 0;
    /// Largest p_err at which larger lattices still fail less often; NaN when flagged.
    double p_err_max = 0;
    /// Half-width of the statistical range of the crossing.
    double ci = 0;
    bool flagged = false;
};

/// Correctable set {(p_loss, p_err) : p_err < boundary(p_loss)}, from a coarse grid.
struct CorrectableRegion {
    /// Ascending p_loss; the last point is the loss-only threshold with p_err_max = 0.
    std::vector<RegionPoint> points;
    /// Interpolation cell: loss-row spacing and relative p_err grid step.
    double loss_cell = 0.03;
    double err_rel_cell = 0.2;
    uint64_t seed = 0;

    /// Piecewise-linear boundary through the unflagged points; 0 past the last point, and the first
    /// point's value before it.
    double boundary(double p_loss) const;
    /// Inside by at least one interpolation cell in both directions.
    bool contains_with_margin(double p_loss, double p_err) const;
    double loss_threshold() const;
};

/// Scans each loss row for the largest p_err with failure decreasing in L (linear interpolation of
/// the rate difference between the smallest and largest size), adds the loss-only endpoint, and
/// makes the boundary nonincreasing by pool-adjacent-violators averaging.
CorrectableRegion correctable_region(const RegionConfig &cfg);

/// Pool-adjacent-violators fit of a nonincreasing sequence (equal weights).
std::vector<double> isotonic_nonincreasing(const std::vector<double> &values);

/// Rebuilds a region from stored points (unflagged rows must be ascending in p_loss).
CorrectableRegion region_from_points(std::vector<RegionPoint> points, double loss_cell, double err_rel_cell);

}  // namespace htpc

#endif
