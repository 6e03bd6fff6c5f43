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


#include "htpc/threshold/crossing.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace htpc {

namespace {

/// Zero of a sampled curve, or NaN if it never goes from <= 0 to > 0.
double zero_crossing(const std::vector<double> &p, const std::vector<double> &d) {
    size_t n = p.size();
    std::vector<size_t> nonpos_prefix(n + 1, 0);
    std::vector<size_t> pos_suffix(n + 1, 0);
    for (size_t i = 0; i < n; i++) {
        nonpos_prefix[i + 1] = nonpos_prefix[i] + (d[i] <= 0);
    }
    for (size_t i = n; i-- > 0;) {
        pos_suffix[i] = pos_suffix[i + 1] + (d[i] > 0);
    }
    long best = -1;
    size_t best_score = 0;
    for (size_t k = 0; k + 1 < n; k++) {
        if (d[k] <= 0 && d[k + 1] > 0) {
            size_t score = nonpos_prefix[k + 1] + pos_suffix[k + 1];
            if (best < 0 || score > best_score) {
                best = (long)k;
                best_score = score;
            }
        }
    }
    if (best < 0) {
        return std::nan("");
    }
    size_t k = (size_t)best;
    return p[k] + (0 - d[k]) * (p[k + 1] - p[k]) / (d[k + 1] - d[k]);
}

double rate_variance(const CurvePoint &c) {
    // Floor the rate at half a count so a zero-failure point still carries some uncertainty.
    double n = (double)c.trials;
    double f = std::clamp(c.rate(), 0.5 / n, 1 - 0.5 / n);
    return f * (1 - f) / n;
}

}  // namespace

bool CrossingEstimate::pairs_consistent() const {
    double lo = -INFINITY;
    double hi = INFINITY;
    for (const auto &pc : pairs) {
        lo = std::max(lo, pc.ci_low);
        hi = std::min(hi, pc.ci_high);
    }
    return lo <= hi;
}

CrossingEstimate estimate_crossing(std::vector<SizeCurve> curves) {
    if (curves.size() < 2) {
        throw std::invalid_argument("crossing estimation needs at least two lattice sizes");
    }
    std::sort(curves.begin(), curves.end(), [](const SizeCurve &a, const SizeCurve &b) { return a.L < b.L; });
    size_t n = curves[0].points.size();
    if (n < 3) {
        throw std::invalid_argument("crossing estimation needs at least three grid points");
    }
    for (const auto &c : curves) {
        if (c.points.size() != n) {
            throw std::invalid_argument("all sizes must share the same grid");
        }
        for (size_t i = 0; i < n; i++) {
            if (c.points[i].p != curves[0].points[i].p || c.points[i].trials == 0) {
                throw std::invalid_argument("all sizes must share the same grid with nonzero trials");
            }
            if (i > 0 && !(c.points[i].p > c.points[i - 1].p)) {
                throw std::invalid_argument("grid must be strictly ascending");
            }
        }
    }
    std::vector<double> p(n);
    for (size_t i = 0; i < n; i++) {
        p[i] = curves[0].points[i].p;
    }
    CrossingEstimate est;
    for (size_t s = 0; s + 1 < curves.size(); s++) {
        const auto &small = curves[s];
        const auto &large = curves[s + 1];
        std::vector<double> d(n), d_hi(n), d_lo(n);
        for (size_t i = 0; i < n; i++) {
            d[i] = large.points[i].rate() - small.points[i].rate();
            double sigma = std::sqrt(rate_variance(large.points[i]) + rate_variance(small.points[i]));
            d_hi[i] = d[i] + 1.96 * sigma;
            d_lo[i] = d[i] - 1.96 * sigma;
        }
        double x = zero_crossing(p, d);
        if (std::isnan(x)) {
            throw NoCrossingError("no crossing between L = " + std::to_string(small.L) + " and L = " +
                                  std::to_string(large.L) + " on the swept grid");
        }
        PairCrossing pc{small.L, large.L, x, zero_crossing(p, d_hi), zero_crossing(p, d_lo)};
        if (std::isnan(pc.ci_low) || pc.ci_low > x) {
            pc.ci_low = std::isnan(pc.ci_low) ? p.front() : std::min(pc.ci_low, x);
        }
        if (std::isnan(pc.ci_high) || pc.ci_high < x) {
            pc.ci_high = std::isnan(pc.ci_high) ? p.back() : std::max(pc.ci_high, x);
        }
        est.pairs.push_back(pc);
    }
    double lo = INFINITY, hi = -INFINITY, sum = 0;
    for (const auto &pc : est.pairs) {
        sum += pc.crossing;
        lo = std::min(lo, pc.crossing);
        hi = std::max(hi, pc.crossing);
    }
    est.threshold = sum / est.pairs.size();
    est.uncertainty = (hi - lo) / 2;
    return est;
}

std::vector<SizeCurve> curves_from_sweep(const SweepResult &result, SweepAxis axis) {
    std::map<uint32_t, SizeCurve> by_size;
    for (const auto &row : result.rows) {
        auto &c = by_size[row.L];
        c.L = row.L;
        double x = axis == SweepAxis::P_LOSS ? row.point.p_loss : axis == SweepAxis::P_ERR ? row.point.p_err : row.point.p_bond;
        c.points.push_back({x, row.failures, row.trials});
    }
    std::vector<SizeCurve> out;
    for (auto &[L, c] : by_size) {
        std::stable_sort(c.points.begin(), c.points.end(), [](const CurvePoint &a, const CurvePoint &b) { return a.p < b.p; });
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace htpc
