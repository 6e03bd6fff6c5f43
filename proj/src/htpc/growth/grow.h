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


#ifndef HTPC_GROWTH_GROW_H
#define HTPC_GROWTH_GROW_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "htpc/growth/strategy.h"

namespace htpc {

struct GrowthRunStats {
    /// Qubits consumed, including every qubit of abandoned partial objects.
    uint64_t raw_qubits = 0;
    uint64_t eo_attempts = 0;
    uint64_t eo_failures = 0;
    uint64_t abandoned_objects = 0;
    uint32_t growth_rounds = 0;
};

struct GrownResource {
    GrowthRunStats stats;
    /// Adjacency of the completed resource; empty when only counts were sampled.
    std::vector<std::vector<uint32_t>> graph;
    uint32_t core = 0;
};

/// Grows one resource with heralded EO failures (probability p_h each). A failed EO discards every
/// part of its group, which is regrown from scratch. Small resources are simulated object by object
/// with explicit graphs; when the expected cost exceeds `explicit_limit` only the counts are
/// sampled, level by level, from negative-binomial distributions. Throws std::domain_error at
/// p_h = 1.
GrownResource grow_resource(const GrowthStrategy &s, double p_h, std::mt19937_64 &rng,
                            double explicit_limit = 2e5);

/// Count-only sampler (always the negative-binomial path).
GrowthRunStats sample_growth_cost(const GrowthStrategy &s, double p_h, std::mt19937_64 &rng);

/// Canonical string of a tree rooted at `root` (AHU encoding); equal strings mean isomorphic
/// rooted trees. Throws std::invalid_argument if the graph is not a tree.
std::string canonical_rooted_tree(const std::vector<std::vector<uint32_t>> &graph, uint32_t root);

}  // namespace htpc

#endif
