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


#include "htpc/threshold/sweep.h"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "htpc/decoder/decode_run.h"
#include "htpc/lattice/cluster_lattice.h"
#include "htpc/util/rng.h"
#include "htpc/util/stats.h"

namespace htpc {

namespace {

void check_probability(double p, const char *name, double hi = 1) {
    if (!(p >= 0 && p <= hi)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, " + std::to_string(hi) + "], got " +
                                    std::to_string(p));
    }
}

}  // namespace

void SweepConfig::validate() const {
    for (uint32_t L : sizes) {
        if (L < 2) {
            throw std::invalid_argument("lattice sizes must be at least 2");
        }
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (workers < 1) {
        throw std::invalid_argument("workers must be at least 1");
    }
    for (const auto &p : points) {
        check_probability(p.p_h, "p_h");
        check_probability(p.p_G, "p_G");
        check_probability(p.p_M, "p_M");
        check_probability(p.p_bond, "p_bond");
        check_probability(p.p_loss, "p_loss");
        check_probability(p.p_err, "p_err", 0.5);
    }
}

uint64_t count_failures(uint32_t L, const SweepPoint &p, uint64_t trials, uint64_t seed, uint64_t point_index,
                        uint64_t size_index, uint32_t workers, bool simulate_dual) {
    ClusterLattice lat(L);
    DecodeParams params;
    params.p_bond = p.p_bond;
    params.p_loss = p.p_loss;
    params.p_err = p.p_err;
    params.simulate_dual = simulate_dual;
    if (workers < 1) {
        workers = 1;
    }
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> failures{0};
    auto work = [&]() {
        uint64_t local = 0;
        while (true) {
            uint64_t t = next.fetch_add(1);
            if (t >= trials) {
                break;
            }
            std::mt19937_64 rng(derive_seed(seed, {point_index, size_index, t}));
            local += !decode_run(lat, params, rng);
        }
        failures += local;
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return failures.load();
}

SweepResult run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    SweepResult out;
    for (size_t i = 0; i < cfg.points.size(); i++) {
        for (size_t j = 0; j < cfg.sizes.size(); j++) {
            SweepRow row;
            row.point = cfg.points[i];
            row.L = cfg.sizes[j];
            row.trials = cfg.trials;
            row.seed = cfg.seed;
            row.failures = count_failures(row.L, row.point, cfg.trials, cfg.seed, i, j, cfg.workers, cfg.simulate_dual);
            row.fail_rate = (double)row.failures / row.trials;
            auto ci = wilson_interval(row.failures, row.trials);
            row.ci_low = ci.first;
            row.ci_high = ci.second;
            out.rows.push_back(row);
        }
    }
    return out;
}

}  // namespace htpc
