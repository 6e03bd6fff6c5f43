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


#include "htpc/threshold/region.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "htpc/threshold/crossing.h"
#include "htpc/threshold/sweep.h"

namespace htpc {

void RegionConfig::validate() const {
    if (sizes.size() < 2 || endpoint_sizes.size() < 2) {
        throw std::invalid_argument("region scan needs at least two lattice sizes");
    }
    for (auto L : sizes) {
        if (L < 2) throw std::invalid_argument("lattice sizes must be at least 2");
    }
    if (loss_rows.empty() || factors.size() < 3 || endpoint_grid.size() < 3) {
        throw std::invalid_argument("region grids too small");
    }
    if (!std::is_sorted(loss_rows.begin(), loss_rows.end()) || !std::is_sorted(factors.begin(), factors.end())) {
        throw std::invalid_argument("region grids must be ascending");
    }
    if (trials < 1 || endpoint_trials < 1 || workers < 1) {
        throw std::invalid_argument("trials and workers must be at least 1");
    }
}

std::vector<double> isotonic_nonincreasing(const std::vector<double> &values) {
    struct Block {
        double sum;
        size_t count;
    };
    std::vector<Block> blocks;
    for (double v : values) {
        blocks.push_back({v, 1});
        while (blocks.size() > 1) {
            auto &b = blocks[blocks.size() - 1];
            auto &a = blocks[blocks.size() - 2];
            if (a.sum / a.count >= b.sum / b.count) {
                break;
            }
            a.sum += b.sum;
            a.count += b.count;
            blocks.pop_back();
        }
    }
    std::vector<double> out;
    for (const auto &b : blocks) {
        out.insert(out.end(), b.count, b.sum / b.count);
    }
    return out;
}

namespace {

struct RowScan {
    double crossing = NAN;
    double ci = NAN;
    double rel_step = NAN;
};

RowScan scan_row(const RegionConfig &cfg, size_t row, double p_loss) {
    double prior = cfg.prior_err_threshold * std::max(0.05, 1 - p_loss / cfg.prior_loss_threshold);
    std::vector<double> grid;
    for (double f : cfg.factors) {
        grid.push_back(std::min(0.5, prior * f));
    }
    double up = cfg.factors.back() / cfg.factors[cfg.factors.size() - 2];
    double down = cfg.factors[0] / cfg.factors[1];
    std::vector<std::vector<CurvePoint>> counts(cfg.sizes.size());
    auto measure = [&](double p_err, size_t slot) {
        SweepPoint pt;
        pt.p_loss = p_loss;
        pt.p_err = p_err;
        std::vector<CurvePoint> col;
        for (size_t j = 0; j < cfg.sizes.size(); j++) {
            uint64_t f = count_failures(cfg.sizes[j], pt, cfg.trials, cfg.seed, row * 1000 + slot, j, cfg.workers);
            col.push_back({p_err, f, cfg.trials});
        }
        return col;
    };
    std::vector<std::vector<CurvePoint>> cols;
    for (size_t k = 0; k < grid.size(); k++) {
        cols.push_back(measure(grid[k], k));
    }
    size_t slot = grid.size();
    for (uint32_t ext = 0; ext <= cfg.max_extensions; ext++) {
        std::vector<SizeCurve> curves;
        for (size_t j : {size_t{0}, cfg.sizes.size() - 1}) {
            SizeCurve c{cfg.sizes[j], {}};
            for (const auto &col : cols) {
                c.points.push_back(col[j]);
            }
            curves.push_back(std::move(c));
        }
        try {
            auto est = estimate_crossing(curves);
            const auto &pc = est.pairs[0];
            RowScan r;
            r.crossing = pc.crossing;
            r.ci = (pc.ci_high - pc.ci_low) / 2;
            for (size_t k = 0; k + 1 < cols.size(); k++) {
                if (cols[k][0].p <= pc.crossing && pc.crossing <= cols[k + 1][0].p) {
                    r.rel_step = cols[k + 1][0].p / cols[k][0].p - 1;
                }
            }
            return r;
        } catch (const NoCrossingError &) {
            if (ext == cfg.max_extensions) {
                break;
            }
            // Extend toward the side where the sign change must lie.
            double d_last = curves[1].points.back().rate() - curves[0].points.back().rate();
            if (d_last <= 0 && cols.back()[0].p < 0.5) {
                cols.push_back(measure(std::min(0.5, cols.back()[0].p * up), slot++));
            } else {
                cols.insert(cols.begin(), measure(cols.front()[0].p * down, slot++));
            }
        }
    }
    return {};
}

}  // namespace

CorrectableRegion correctable_region(const RegionConfig &cfg) {
    cfg.validate();
    CorrectableRegion region;
    region.seed = cfg.seed;
    double max_rel = 0;
    SweepConfig endpoint;
    endpoint.sizes = cfg.endpoint_sizes;
    endpoint.trials = cfg.endpoint_trials;
    endpoint.seed = cfg.seed;
    endpoint.workers = cfg.workers;
    for (double pl : cfg.endpoint_grid) {
        SweepPoint pt;
        pt.p_loss = pl;
        endpoint.points.push_back(pt);
    }
    RegionPoint end_point;
    end_point.p_err_max = 0;
    try {
        auto est = estimate_crossing(curves_from_sweep(run_sweep(endpoint), SweepAxis::P_LOSS));
        end_point.p_loss = est.threshold;
        double lo = INFINITY, hi = -INFINITY;
        for (const auto &pc : est.pairs) {
            lo = std::min(lo, pc.ci_low);
            hi = std::max(hi, pc.ci_high);
        }
        end_point.ci = (hi - lo) / 2;
    } catch (const NoCrossingError &) {
        end_point.p_loss = NAN;
        end_point.flagged = true;
    }
    for (size_t r = 0; r < cfg.loss_rows.size(); r++) {
        double pl = cfg.loss_rows[r];
        if (!end_point.flagged && pl >= end_point.p_loss) {
            continue;
        }
        auto scan = scan_row(cfg, r + 1, pl);
        RegionPoint pt;
        pt.p_loss = pl;
        pt.p_err_max = scan.crossing;
        pt.ci = scan.ci;
        pt.flagged = std::isnan(scan.crossing);
        if (!std::isnan(scan.rel_step)) {
            max_rel = std::max(max_rel, scan.rel_step);
        }
        region.points.push_back(pt);
    }
    region.points.push_back(end_point);
    double loss_cell = 0;
    for (size_t r = 0; r + 1 < cfg.loss_rows.size(); r++) {
        loss_cell = std::max(loss_cell, cfg.loss_rows[r + 1] - cfg.loss_rows[r]);
    }
    return region_from_points(std::move(region.points), loss_cell, max_rel > 0 ? max_rel : 0.2);
}

CorrectableRegion region_from_points(std::vector<RegionPoint> points, double loss_cell, double err_rel_cell) {
    CorrectableRegion region;
    region.loss_cell = loss_cell;
    region.err_rel_cell = err_rel_cell;
    std::vector<size_t> good;
    for (size_t i = 0; i < points.size(); i++) {
        if (!points[i].flagged && !std::isnan(points[i].p_err_max)) {
            if (!good.empty() && points[i].p_loss < points[good.back()].p_loss) {
                throw std::invalid_argument("region points must be ascending in p_loss");
            }
            good.push_back(i);
        }
    }
    std::vector<double> vals;
    for (size_t i : good) {
        vals.push_back(points[i].p_err_max);
    }
    vals = isotonic_nonincreasing(vals);
    for (size_t k = 0; k < good.size(); k++) {
        points[good[k]].p_err_max = vals[k];
    }
    region.points = std::move(points);
    return region;
}

double CorrectableRegion::boundary(double p_loss) const {
    const RegionPoint *prev = nullptr;
    for (const auto &pt : points) {
        if (pt.flagged || std::isnan(pt.p_err_max)) {
            continue;
        }
        if (p_loss <= pt.p_loss) {
            if (!prev) {
                return pt.p_err_max;
            }
            double t = (p_loss - prev->p_loss) / (pt.p_loss - prev->p_loss);
            return prev->p_err_max + t * (pt.p_err_max - prev->p_err_max);
        }
        prev = &pt;
    }
    return 0;
}

bool CorrectableRegion::contains_with_margin(double p_loss, double p_err) const {
    double b = boundary(p_loss + loss_cell);
    return b > 0 && p_err * (1 + err_rel_cell) <= b;
}

double CorrectableRegion::loss_threshold() const {
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
        if (!it->flagged && it->p_err_max == 0) {
            return it->p_loss;
        }
    }
    return NAN;
}

}  // namespace htpc
