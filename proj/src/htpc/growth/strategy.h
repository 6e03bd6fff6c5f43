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


#ifndef HTPC_GROWTH_STRATEGY_H
#define HTPC_GROWTH_STRATEGY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace htpc {

enum class StrategyKind : uint8_t {
    STAR,
    CROSS,
    SNOWFLAKE,
};

enum class EOKind : uint8_t {
    PARITY_PROJECTION,
    CONTROL_PHASE,
    /// Pick per fusion so the contracted path needs no extra single-qubit fix-up.
    AUTO,
};

enum class MemoryModel : uint8_t {
    DEPHASING,
    DEPOLARIZING,
};

std::string_view strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(std::string_view name);
std::string_view eo_kind_name(EOKind kind);
EOKind eo_kind_from_name(std::string_view name);
std::string_view memory_model_name(MemoryModel m);
MemoryModel memory_model_from_name(std::string_view name);

/// Resource recipe.
///
/// - snowflake: `depth` rounds that link `branching` trees at their roots, giving four arms of
///   branching^depth qubits; two merge rounds then fuse the four arm roots into one core.
/// - cross: `depth` rounds that join chains end to start, then the same two merge rounds.
/// - star: `depth` merge rounds starting from single qubits (2^depth qubits, one centre).
struct GrowthStrategy {
    StrategyKind kind = StrategyKind::SNOWFLAKE;
    uint32_t branching = 2;
    uint32_t depth = 1;
    uint32_t attempts_N = 1;
    EOKind fusion_eo = EOKind::AUTO;

    /// Throws std::invalid_argument when the growth parameters are out of range.
    void validate_growth() const;
    /// validate_growth() plus: the resource must supply attempts_N attempt qubits per direction.
    void validate() const;
};

struct EOModel {
    double p_h = 0;
    double p_G = 0;
    double p_M = 0;
    MemoryModel memory = MemoryModel::DEPHASING;

    double p_s() const {
        return 1 - p_h;
    }
    void validate() const;
};

struct GrowthRound {
    enum Kind : uint8_t { LINK, MERGE } kind;
    /// Number of objects joined per group; the group needs arity - 1 successful EOs.
    uint32_t arity;
};

std::vector<GrowthRound> growth_recipe(const GrowthStrategy &s);
uint64_t resource_size(const GrowthStrategy &s);
/// Attempt qubits available toward each of the four neighbours.
uint64_t leaves_per_direction(const GrowthStrategy &s);
/// Smallest depth whose resource supplies at least `attempts` qubits per direction.
uint32_t min_depth_for_attempts(StrategyKind kind, uint32_t attempts, uint32_t branching = 2);

/// Expected raw qubits per completed resource when every EO fails (heralded) with p_h and a failure
/// discards all parts of the group. Throws std::domain_error for p_h >= 1.
double expected_cost(const GrowthStrategy &s, double p_h);

/// Smallest N with p_h^N <= target. Returns 1 when p_h == 0.
uint32_t attempts_for_target(double p_h, double target_bond_fail);

struct ResourceRequirement {
    uint32_t attempts_N = 1;
    uint32_t depth = 1;
    uint64_t leaves_per_direction = 0;
    uint64_t total_qubits = 0;
    double bond_missing_prob = 0;
};

/// Throws std::invalid_argument unless 0 < target < 1 and 0 <= p_h < 1.
ResourceRequirement required_resource_size(StrategyKind kind, double p_h, double target_bond_fail,
                                           uint32_t branching = 2);

}  // namespace htpc

#endif
