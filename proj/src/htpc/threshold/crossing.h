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


#ifndef HTPC_THRESHOLD_CROSSING_H
#define HTPC_THRESHOLD_CROSSING_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "htpc/threshold/sweep.h"

namespace htpc {

struct CurvePoint {
    double p = 0;
    uint64_t failures = 0;
    uint64_t trials = 0;

    double rate() const {
        return trials ? (double)failures / trials : 0;
    }
};

/// Logical failure counts for one lattice size along a parameter axis (ascending p).
struct SizeCurve {
    uint32_t L = 0;
    std::vector<CurvePoint> points;
};

struct PairCrossing {
    uint32_t L_small = 0;
    uint32_t L_large = 0;
    double crossing = 0;
    /// Range of crossings compatible with the 95% statistical error of the rate difference.
    double ci_low = 0;
    double ci_high = 0;
};

struct CrossingEstimate {
    double threshold = 0;
    /// Half the spread of the pairwise crossings.
    double uncertainty = 0;
    std::vector<PairCrossing> pairs;

    /// True when the pairwise confidence ranges share a common point.
    bool pairs_consistent() const;
};

class NoCrossingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// For each pair of adjacent sizes, finds where the failure rate of the larger lattice overtakes
/// the smaller one and linearly interpolates the difference to zero. When noise produces several
/// sign changes the one best separating negative from positive differences is used.
///
/// Throws std::invalid_argument for fewer than two sizes, fewer than three points, or mismatched
/// grids, and NoCrossingError when some pair never changes sign.
CrossingEstimate estimate_crossing(std::vector<SizeCurve> curves);

enum class SweepAxis { P_LOSS, P_ERR, P_BOND };

/// Groups sweep rows into one curve per size along the chosen axis.
std::vector<SizeCurve> curves_from_sweep(const SweepResult &result, SweepAxis axis);

}  // namespace htpc

#endif
