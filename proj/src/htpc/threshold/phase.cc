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


#include "htpc/threshold/phase.h"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "htpc/growth/error_profile.h"
#include "htpc/util/rng.h"

namespace htpc {

void PhaseConfig::validate() const {
    if (p_h_grid.empty() || bond_fail_targets.empty() || branchings.empty()) {
        throw std::invalid_argument("phase grids must be nonempty");
    }
    for (double p : p_h_grid) {
        if (!(p >= 0 && p < 1)) throw std::invalid_argument("p_h must be in [0, 1)");
    }
    for (double t : bond_fail_targets) {
        if (!(t > 0 && t < 1)) throw std::invalid_argument("bond-failure targets must be in (0, 1)");
    }
    if (!(memory_ratio >= 0)) throw std::invalid_argument("memory ratio must be >= 0");
    if (!(p_G_lo > 0 && p_G_lo < p_G_hi && p_G_hi <= 1)) throw std::invalid_argument("bad p_G search range");
    if (traces < 1 || workers < 1) throw std::invalid_argument("traces and workers must be at least 1");
}

double induced_qubit_loss(double bond_missing) {
    return 1 - std::pow(1 - bond_missing, 4);
}

namespace {

struct Candidate {
    GrowthStrategy strategy;
    uint64_t qubits = 0;
    double p_loss = 0;
    uint64_t seed = 0;
};

std::vector<Candidate> candidates_for(const PhaseConfig &cfg, size_t ph_index, double p_h) {
    std::vector<Candidate> out;
    std::vector<uint32_t> seen_n;
    for (double target : cfg.bond_fail_targets) {
        uint32_t n = attempts_for_target(p_h, target);
        bool dup = false;
        for (auto s : seen_n) dup |= s == n;
        if (dup) continue;
        seen_n.push_back(n);
        for (uint32_t b : cfg.branchings) {
            if (cfg.strategy != StrategyKind::SNOWFLAKE && b != cfg.branchings[0]) continue;
            uint32_t d0 = min_depth_for_attempts(cfg.strategy, n, b);
            for (uint32_t d = d0; d <= d0 + cfg.extra_depth; d++) {
                Candidate c;
                c.strategy.kind = cfg.strategy;
                c.strategy.branching = b;
                c.strategy.depth = d;
                c.strategy.attempts_N = n;
                c.qubits = resource_size(c.strategy);
                if (c.qubits > cfg.max_resource_qubits) break;
                c.p_loss = induced_qubit_loss(std::pow(p_h, n));
                c.seed = derive_seed(cfg.seed, {ph_index, n, d, b});
                out.push_back(c);
            }
        }
    }
    return out;
}

std::vector<ProfileModel> build_models(const PhaseConfig &cfg, double p_h, const std::vector<Candidate> &cands) {
    std::vector<ProfileModel> models(cands.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i; (i = next++) < cands.size();) {
            models[i] = build_profile_model(cands[i].strategy, p_h, cfg.memory, cfg.traces, cands[i].seed);
        }
    };
    uint32_t nw = std::min<size_t>(cfg.workers, std::max<size_t>(1, cands.size()));
    std::vector<std::thread> pool;
    for (uint32_t w = 1; w < nw; w++) pool.emplace_back(work);
    work();
    for (auto &t : pool) t.join();
    return models;
}

bool candidate_ok(const PhaseConfig &cfg, const CorrectableRegion &region, const Candidate &c, const ProfileModel &m,
                  double p_G) {
    return region.contains_with_margin(c.p_loss, m.p_z(p_G, cfg.memory_ratio * p_G));
}

}  // namespace

PhaseDiagramResult phase_boundary(const PhaseConfig &cfg, const CorrectableRegion &region) {
    cfg.validate();
    PhaseDiagramResult out;
    out.strategy = cfg.strategy;
    out.memory_ratio = cfg.memory_ratio;
    for (size_t i = 0; i < cfg.p_h_grid.size(); i++) {
        double p_h = cfg.p_h_grid[i];
        PhasePoint pt;
        pt.p_h = p_h;
        pt.seed = derive_seed(cfg.seed, {i});
        auto cands = candidates_for(cfg, i, p_h);
        size_t loss_ok = 0;
        for (const auto &c : cands) {
            loss_ok += region.contains_with_margin(c.p_loss, 0);
        }
        if (loss_ok == 0) {
            pt.diagnostics = cands.empty() ? "no candidate within the resource cap"
                                           : "induced loss outside the correctable region for every candidate";
            out.points.push_back(pt);
            continue;
        }
        auto models = build_models(cfg, p_h, cands);
        double lo_log = std::log(cfg.p_G_lo), hi_log = std::log(cfg.p_G_hi);
        for (size_t k = 0; k < cands.size(); k++) {
            const auto &c = cands[k];
            if (!candidate_ok(cfg, region, c, models[k], cfg.p_G_lo)) continue;
            double best;
            if (candidate_ok(cfg, region, c, models[k], cfg.p_G_hi)) {
                best = cfg.p_G_hi;
            } else {
                double a = lo_log, b = hi_log;
                for (uint32_t step = 0; step < cfg.bisection_steps; step++) {
                    double mid = 0.5 * (a + b);
                    (candidate_ok(cfg, region, c, models[k], std::exp(mid)) ? a : b) = mid;
                }
                best = std::exp(a);
            }
            if (best > pt.p_G_max) {
                pt.p_G_max = best;
                pt.feasible = true;
                pt.attempts_N = c.strategy.attempts_N;
                pt.depth = c.strategy.depth;
                pt.branching = c.strategy.branching;
                pt.resource_qubits = c.qubits;
                pt.p_loss = c.p_loss;
                pt.p_err = models[k].p_z(best, cfg.memory_ratio * best);
            }
        }
        if (!pt.feasible) {
            pt.diagnostics = "error rate outside the correctable region even at p_G = " + std::to_string(cfg.p_G_lo);
        }
        out.points.push_back(pt);
    }
    return out;
}

PhaseDiagramResult memory_effect(PhaseConfig cfg, const CorrectableRegion &region, double ratio) {
    if (!(ratio >= 0)) throw std::invalid_argument("memory ratio must be >= 0");
    cfg.memory_ratio = ratio;
    return phase_boundary(cfg, region);
}

bool phase_feasible(const PhaseConfig &cfg, const CorrectableRegion &region, double p_h, double p_G) {
    cfg.validate();
    size_t idx = cfg.p_h_grid.size();
    for (size_t i = 0; i < cfg.p_h_grid.size(); i++) {
        if (cfg.p_h_grid[i] == p_h) idx = i;
    }
    if (idx == cfg.p_h_grid.size()) throw std::invalid_argument("p_h is not on the configured grid");
    auto cands = candidates_for(cfg, idx, p_h);
    auto models = build_models(cfg, p_h, cands);
    for (size_t k = 0; k < cands.size(); k++) {
        if (candidate_ok(cfg, region, cands[k], models[k], p_G)) return true;
    }
    return false;
}

}  // namespace htpc
