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


#ifndef HTPC_UTIL_STATS_H
#define HTPC_UTIL_STATS_H

#include <cmath>
#include <cstdint>
#include <utility>

namespace htpc {

/// Wilson score interval for a binomial proportion at the given z (default 1.96, i.e. 95%).
inline std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials, double z = 1.96) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    double n = (double)trials;
    double p = successes / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    double lo = center - half;
    double hi = center + half;
    if (successes == 0) {
        lo = 0;
    }
    if (successes == trials) {
        hi = 1;
    }
    return {lo < 0 ? 0 : lo, hi > 1 ? 1 : hi};
}

/// Running mean and variance (Welford).
struct RunningStats {
    uint64_t n = 0;
    double mean = 0;
    double m2 = 0;

    void add(double x) {
        n++;
        double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    double variance() const {
        return n > 1 ? m2 / (n - 1) : 0;
    }
    double stderr_of_mean() const {
        return n > 0 ? std::sqrt(variance() / n) : 0;
    }
};

}  // namespace htpc

#endif
