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


#include "htpc/growth/strategy.h"

#include <cmath>
#include <stdexcept>

namespace htpc {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
    }
}

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t k = 0; k < e; k++) {
        if (r > (uint64_t{1} << 40)) {
            throw std::overflow_error("resource size overflow");
        }
        r *= b;
    }
    return r;
}

}  // namespace

std::string_view strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::STAR:
            return "star";
        case StrategyKind::CROSS:
            return "cross";
        case StrategyKind::SNOWFLAKE:
            return "snowflake";
    }
    return "?";
}

StrategyKind strategy_from_name(std::string_view name) {
    if (name == "star") return StrategyKind::STAR;
    if (name == "cross") return StrategyKind::CROSS;
    if (name == "snowflake") return StrategyKind::SNOWFLAKE;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (expected star, cross or snowflake)");
}

std::string_view eo_kind_name(EOKind kind) {
    switch (kind) {
        case EOKind::PARITY_PROJECTION:
            return "parity_projection";
        case EOKind::CONTROL_PHASE:
            return "control_phase";
        case EOKind::AUTO:
            return "auto";
    }
    return "?";
}

EOKind eo_kind_from_name(std::string_view name) {
    if (name == "parity_projection" || name == "parity") return EOKind::PARITY_PROJECTION;
    if (name == "control_phase" || name == "cz") return EOKind::CONTROL_PHASE;
    if (name == "auto") return EOKind::AUTO;
    throw std::invalid_argument("unknown EO kind '" + std::string(name) + "'");
}

std::string_view memory_model_name(MemoryModel m) {
    return m == MemoryModel::DEPHASING ? "dephasing" : "depolarizing";
}

MemoryModel memory_model_from_name(std::string_view name) {
    if (name == "dephasing") return MemoryModel::DEPHASING;
    if (name == "depolarizing") return MemoryModel::DEPOLARIZING;
    throw std::invalid_argument("unknown memory model '" + std::string(name) + "'");
}

void GrowthStrategy::validate_growth() const {
    if (depth < 1) {
        throw std::invalid_argument("depth must be at least 1");
    }
    if (kind == StrategyKind::SNOWFLAKE && branching < 2) {
        throw std::invalid_argument("snowflake branching must be at least 2");
    }
    if (kind != StrategyKind::SNOWFLAKE && branching != 2) {
        throw std::invalid_argument("branching applies to the snowflake strategy only");
    }
    if (kind == StrategyKind::STAR && depth > 24) {
        throw std::invalid_argument("star depth too large");
    }
    if (kind != StrategyKind::STAR && resource_size(*this) > (uint64_t{1} << 22)) {
        throw std::invalid_argument("resource too large to simulate");
    }
}

void GrowthStrategy::validate() const {
    validate_growth();
    if (attempts_N < 1) {
        throw std::invalid_argument("attempts_N must be at least 1");
    }
    uint64_t supply = leaves_per_direction(*this);
    if (supply < attempts_N) {
        throw std::invalid_argument(std::string(strategy_name(kind)) + " of depth " + std::to_string(depth) +
                                    " supplies " + std::to_string(supply) + " attempt qubits per direction, fewer than attempts_N = " +
                                    std::to_string(attempts_N));
    }
}

void EOModel::validate() const {
    check_probability(p_h, "p_h");
    check_probability(p_G, "p_G");
    check_probability(p_M, "p_M");
}

std::vector<GrowthRound> growth_recipe(const GrowthStrategy &s) {
    std::vector<GrowthRound> rounds;
    if (s.kind == StrategyKind::STAR) {
        for (uint32_t r = 0; r < s.depth; r++) {
            rounds.push_back({GrowthRound::MERGE, 2});
        }
        return rounds;
    }
    uint32_t arity = s.kind == StrategyKind::SNOWFLAKE ? s.branching : 2;
    for (uint32_t r = 0; r < s.depth; r++) {
        rounds.push_back({GrowthRound::LINK, arity});
    }
    rounds.push_back({GrowthRound::MERGE, 2});
    rounds.push_back({GrowthRound::MERGE, 2});
    return rounds;
}

uint64_t resource_size(const GrowthStrategy &s) {
    uint64_t size = 1;
    for (const auto &r : growth_recipe(s)) {
        size *= r.arity;
    }
    return size;
}

uint64_t leaves_per_direction(const GrowthStrategy &s) {
    switch (s.kind) {
        case StrategyKind::STAR:
            return (ipow(2, s.depth) - 1) / 4;
        case StrategyKind::CROSS:
            return ipow(2, s.depth) - 1;
        case StrategyKind::SNOWFLAKE:
            return (s.branching - 1) * ipow(s.branching, s.depth - 1);
    }
    return 0;
}

uint32_t min_depth_for_attempts(StrategyKind kind, uint32_t attempts, uint32_t branching) {
    GrowthStrategy s;
    s.kind = kind;
    s.branching = kind == StrategyKind::SNOWFLAKE ? branching : 2;
    for (uint32_t d = 1; d < 40; d++) {
        s.depth = d;
        if (leaves_per_direction(s) >= attempts) {
            return d;
        }
    }
    throw std::invalid_argument("no resource depth supplies " + std::to_string(attempts) + " attempts");
}

double expected_cost(const GrowthStrategy &s, double p_h) {
    check_probability(p_h, "p_h");
    if (p_h >= 1) {
        throw std::domain_error("expected cost diverges at p_h = 1");
    }
    double p_s = 1 - p_h;
    double cost = 1;
    for (const auto &r : growth_recipe(s)) {
        cost = r.arity * cost / std::pow(p_s, (double)(r.arity - 1));
    }
    return cost;
}

uint32_t attempts_for_target(double p_h, double target) {
    if (!(target > 0 && target < 1)) {
        throw std::invalid_argument("target bond failure must be in (0, 1), got " + std::to_string(target));
    }
    check_probability(p_h, "p_h");
    if (p_h >= 1) {
        throw std::domain_error("no finite attempt count reaches the target at p_h = 1");
    }
    if (p_h == 0) {
        return 1;
    }
    double n = std::log(target) / std::log(p_h);
    // Guard against n landing a hair above an integer through rounding.
    double r = std::round(n);
    uint32_t N = (std::abs(n - r) < 1e-9) ? (uint32_t)r : (uint32_t)std::ceil(n);
    return N < 1 ? 1 : N;
}

ResourceRequirement required_resource_size(StrategyKind kind, double p_h, double target, uint32_t branching) {
    ResourceRequirement req;
    req.attempts_N = attempts_for_target(p_h, target);
    req.depth = min_depth_for_attempts(kind, req.attempts_N, branching);
    GrowthStrategy s;
    s.kind = kind;
    s.branching = kind == StrategyKind::SNOWFLAKE ? branching : 2;
    s.depth = req.depth;
    s.attempts_N = req.attempts_N;
    req.leaves_per_direction = leaves_per_direction(s);
    req.total_qubits = resource_size(s);
    req.bond_missing_prob = std::pow(p_h, (double)req.attempts_N);
    return req;
}

}  // namespace htpc
