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


#include "htpc/growth/error_profile.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "htpc/growth/sensitivity.h"
#include "htpc/util/rng.h"
#include "htpc/util/stats.h"

namespace htpc {

namespace {

constexpr uint32_t kZ0 = 1u << 0;
constexpr uint32_t kNeighborZ = 0b11110;
constexpr uint32_t kX0 = 1u << 5;

std::array<Observable, 10> window_observables(const NodeWindow &w) {
    std::array<Observable, 10> obs{};
    for (int r = 0; r < 5; r++) {
        obs[r] = {w.cores[r], 'Z'};
        obs[5 + r] = {w.cores[r], 'X'};
    }
    return obs;
}

struct EventFlags {
    bool z0;
    bool x0;
    bool same;
    bool cross;
};

EventFlags classify(uint32_t flips) {
    int w = std::popcount(flips & kNeighborZ);
    int reduced = std::min(w, 4 - w);
    bool z0 = flips & kZ0;
    return {z0, (flips & kX0) != 0, reduced >= 2, z0 && reduced >= 1};
}

uint32_t memory_choices(MemoryModel m) {
    return m == MemoryModel::DEPHASING ? 1 : 3;
}

}  // namespace

std::string_view profile_method_name(ProfileMethod m) {
    return m == ProfileMethod::EXACT ? "exact" : "sampled";
}

ProfileMethod profile_method_from_name(std::string_view name) {
    if (name == "exact") return ProfileMethod::EXACT;
    if (name == "sampled") return ProfileMethod::SAMPLED;
    throw std::invalid_argument("unknown profile method '" + std::string(name) + "'");
}

TraceSensitivity summarize_window(const NodeWindow &w, MemoryModel memory) {
    auto obs = window_observables(w);
    auto sites = backward_sensitivity(w.circuit, obs);
    const auto &ops = w.circuit.ops();
    TraceSensitivity out;
    out.bond_present = w.bond_present;
    out.ticks = w.ticks;
    for (const auto &site : sites) {
        const Op &op = ops[site.op_index];
        uint32_t nz = 0, nx = 0, ns = 0, nc = 0, choices = 0;
        auto tally = [&](uint32_t flips) {
            auto e = classify(flips);
            nz += e.z0;
            nx += e.x0;
            ns += e.same;
            nc += e.cross;
            choices++;
        };
        SiteClass cls;
        uint64_t multiplicity = 1;
        if (op.type == OpType::NOISE2) {
            cls = SITE_GATE2;
            for (uint8_t k = 1; k < 16; k++) {
                tally(site.flips(k & 3, k >> 2));
            }
        } else if (op.type == OpType::NOISE1) {
            cls = SITE_GATE1;
            for (uint8_t p = 1; p < 4; p++) {
                tally(site.flips(p));
            }
        } else {
            cls = SITE_MEMORY;
            multiplicity = op.record;
            if (memory == MemoryModel::DEPHASING) {
                tally(site.flips(2));
            } else {
                for (uint8_t p = 1; p < 4; p++) {
                    tally(site.flips(p));
                }
            }
        }
        out.z_hist[cls][nz] += multiplicity;
        out.x_hist[cls][nx] += multiplicity;
        out.same[cls] += multiplicity * (double)ns / choices;
        out.cross[cls] += multiplicity * (double)nc / choices;
    }
    return out;
}

double odd_flip_probability(const std::array<std::array<uint64_t, 16>, 3> &hist, double p_G, double p_M,
                            MemoryModel memory) {
    const double p[3] = {p_G, p_G, p_M};
    const double choices[3] = {3, 15, (double)memory_choices(memory)};
    double prod = 1;
    for (int c = 0; c < 3; c++) {
        for (int k = 1; k < 16; k++) {
            if (hist[c][k] == 0) {
                continue;
            }
            double f = 1 - 2 * p[c] * k / choices[c];
            prod *= std::pow(f, (double)hist[c][k]);
        }
    }
    return 0.5 * (1 - prod);
}

double ProfileModel::p_z(double p_G, double p_M) const {
    double sum = 0;
    for (const auto &t : traces) {
        sum += odd_flip_probability(t.z_hist, p_G, p_M, memory);
    }
    return traces.empty() ? 0 : sum / traces.size();
}

NodeErrorProfile ProfileModel::evaluate(double p_G, double p_M) const {
    NodeErrorProfile prof;
    prof.method = ProfileMethod::EXACT;
    prof.traces = traces.size();
    if (traces.empty()) {
        return prof;
    }
    RunningStats z;
    uint64_t missing = 0;
    for (const auto &t : traces) {
        double pz = odd_flip_probability(t.z_hist, p_G, p_M, memory);
        z.add(pz);
        prof.p_x += odd_flip_probability(t.x_hist, p_G, p_M, memory);
        const double p[3] = {p_G, p_G, p_M};
        for (int c = 0; c < 3; c++) {
            prof.p_corr_same += p[c] * t.same[c];
            prof.p_corr_cross += p[c] * t.cross[c];
        }
        for (auto b : t.bond_present) {
            missing += !b;
        }
    }
    double n = (double)traces.size();
    prof.p_z = z.mean;
    prof.p_x /= n;
    prof.p_corr_same /= n;
    prof.p_corr_cross /= n;
    prof.bond_missing = missing / (4 * n);
    double half = 1.96 * z.stderr_of_mean();
    prof.p_z_ci_low = std::max(0.0, z.mean - half);
    prof.p_z_ci_high = std::min(1.0, z.mean + half);
    return prof;
}

ProfileModel build_profile_model(const GrowthStrategy &s, double p_h, MemoryModel memory, uint32_t num_traces,
                                 uint64_t seed) {
    s.validate();
    if (!(p_h >= 0 && p_h <= 1)) {
        throw std::invalid_argument("p_h must be in [0, 1]");
    }
    if (num_traces == 0) {
        throw std::invalid_argument("need at least one trace");
    }
    ProfileModel model{s, p_h, memory, {}};
    model.traces.reserve(num_traces);
    for (uint32_t t = 0; t < num_traces; t++) {
        std::mt19937_64 rng(derive_seed(seed, {s.attempts_N, s.depth, t}));
        auto trace = sample_window_trace(s.attempts_N, 1 - p_h, rng);
        model.traces.push_back(summarize_window(fuse_and_prune_node(s, trace), memory));
    }
    return model;
}

NodeErrorProfile estimate_error_profile(const GrowthStrategy &s, const EOModel &eo, uint32_t num_traces,
                                        uint64_t seed, ProfileMethod method, uint32_t shots) {
    eo.validate();
    if (method == ProfileMethod::EXACT) {
        return build_profile_model(s, eo.p_h, eo.memory, num_traces, seed).evaluate(eo.p_G, eo.p_M);
    }
    s.validate();
    if (num_traces == 0 || shots == 0) {
        throw std::invalid_argument("need at least one trace and one shot");
    }
    NodeErrorProfile prof;
    prof.method = ProfileMethod::SAMPLED;
    prof.traces = num_traces;
    uint64_t total = 0, zc = 0, xc = 0, missing = 0;
    double same_sum = 0, cross_sum = 0;
    for (uint32_t t = 0; t < num_traces; t++) {
        std::mt19937_64 rng(derive_seed(seed, {s.attempts_N, s.depth, t}));
        auto trace = sample_window_trace(s.attempts_N, eo.p_s(), rng);
        auto w = fuse_and_prune_node(s, trace);
        auto obs = window_observables(w);
        for (auto b : w.bond_present) {
            missing += !b;
        }
        uint64_t tz = 0, w2 = 0, any_nb = 0, z_and_nb = 0;
        std::array<uint64_t, 4> nb{};
        std::mt19937_64 noise(derive_seed(seed, {s.attempts_N, s.depth, t, 1}));
        for (uint32_t k = 0; k < shots; k++) {
            uint32_t flips = sample_forward(w.circuit, obs, eo.p_G, eo.p_M, eo.memory, noise);
            auto e = classify(flips);
            int weight = std::popcount(flips & kNeighborZ);
            tz += e.z0;
            xc += e.x0;
            w2 += weight == 2;
            any_nb += weight >= 1 && weight <= 3;
            z_and_nb += e.z0 && weight >= 1 && weight <= 3;
            for (int r = 0; r < 4; r++) {
                nb[r] += (flips >> (1 + r)) & 1;
            }
        }
        // Correlated rates: joint frequencies minus what independent marginals predict.
        double n = shots;
        std::array<double, 4> q{};
        for (int r = 0; r < 4; r++) {
            q[r] = nb[r] / n;
        }
        double indep_w2 = 0;
        for (int i = 0; i < 4; i++) {
            for (int j = i + 1; j < 4; j++) {
                double term = q[i] * q[j];
                for (int k = 0; k < 4; k++) {
                    if (k != i && k != j) {
                        term *= 1 - q[k];
                    }
                }
                indep_w2 += term;
            }
        }
        same_sum += w2 / n - indep_w2;
        cross_sum += z_and_nb / n - (tz / n) * (any_nb / n);
        zc += tz;
        total += shots;
    }
    prof.p_z = (double)zc / total;
    prof.p_x = (double)xc / total;
    prof.p_corr_same = std::max(0.0, same_sum / num_traces);
    prof.p_corr_cross = std::max(0.0, cross_sum / num_traces);
    prof.bond_missing = missing / (4.0 * num_traces);
    auto ci = wilson_interval(zc, total);
    prof.p_z_ci_low = ci.first;
    prof.p_z_ci_high = ci.second;
    return prof;
}

}  // namespace htpc
