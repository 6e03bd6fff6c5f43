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


#ifndef HTPC_GROWTH_RESOURCE_H
#define HTPC_GROWTH_RESOURCE_H

#include <array>
#include <cstdint>
#include <vector>

#include "htpc/growth/graph_builder.h"
#include "htpc/growth/strategy.h"
#include "htpc/pauli/circuit.h"

namespace htpc {

struct Join {
    GrowthRound::Kind kind;
    uint32_t a;
    uint32_t b;
};

/// Abandonment-free growth schedule of one resource, in local qubit indices.
struct ResourcePlan {
    uint32_t size = 0;
    uint32_t core = 0;
    /// rounds[r] lists the joins performed in growth round r (all in parallel).
    std::vector<std::vector<Join>> rounds;
    /// Arm index (0..3) of every qubit for arm-based strategies; empty for star.
    std::vector<uint8_t> arm;
    std::array<uint32_t, 4> arm_roots{};
};

ResourcePlan plan_resource(const GrowthStrategy &s);

/// Emits the growth of a resource at qubit offset `offset`: one tick of preparations followed by one
/// tick per growth round. Several resources can share a builder by interleaving the calls.
void emit_preparation(GraphCircuitBuilder &b, const ResourcePlan &plan, uint32_t offset);
void emit_round(GraphCircuitBuilder &b, const ResourcePlan &plan, size_t round, uint32_t offset);

/// Attempt qubits toward each direction, in the order they are consumed. Uses the builder's graph
/// after growth (global indices).
std::array<std::vector<uint32_t>, 4> attempt_candidates(const GrowthStrategy &s, const ResourcePlan &plan,
                                                        const GraphCircuitBuilder &b, uint32_t offset);

/// Breadth-first distances and parents from `root` in the builder's current graph.
/// Unreachable vertices get distance UINT32_MAX.
struct BfsTree {
    std::vector<uint32_t> dist;
    std::vector<uint32_t> parent;
};
BfsTree bfs_tree(const std::vector<std::vector<uint32_t>> &adj, uint32_t root);

/// A single resource grown without fusions, ready for stabilizer checks.
struct ResourceCircuit {
    Circuit circuit;
    std::vector<std::vector<uint32_t>> graph;
    uint32_t core = 0;
    uint32_t ticks = 0;
};
ResourceCircuit build_resource_circuit(const GrowthStrategy &s);

}  // namespace htpc

#endif
