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


#include "htpc/growth/resource.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace htpc {

namespace {

struct Piece {
    uint32_t root;
    uint32_t end;
};

}  // namespace

ResourcePlan plan_resource(const GrowthStrategy &s) {
    auto recipe = growth_recipe(s);
    ResourcePlan plan;
    plan.size = (uint32_t)resource_size(s);
    std::vector<Piece> pieces(plan.size);
    for (uint32_t q = 0; q < plan.size; q++) {
        pieces[q] = {q, q};
    }
    for (const auto &round : recipe) {
        if (round.kind == GrowthRound::MERGE && s.kind != StrategyKind::STAR && pieces.size() == 4) {
            plan.arm.resize(plan.size);
            uint32_t per_arm = plan.size / 4;
            for (uint32_t q = 0; q < plan.size; q++) {
                plan.arm[q] = (uint8_t)(q / per_arm);
            }
            for (int k = 0; k < 4; k++) {
                plan.arm_roots[k] = pieces[k].root;
            }
        }
        std::vector<Join> joins;
        std::vector<Piece> next;
        for (size_t g = 0; g < pieces.size(); g += round.arity) {
            Piece head = pieces[g];
            for (uint32_t i = 1; i < round.arity; i++) {
                const Piece &other = pieces[g + i];
                if (round.kind == GrowthRound::MERGE) {
                    joins.push_back({GrowthRound::MERGE, head.root, other.root});
                } else if (s.kind == StrategyKind::CROSS) {
                    joins.push_back({GrowthRound::LINK, head.end, other.root});
                    head.end = other.end;
                } else {
                    joins.push_back({GrowthRound::LINK, head.root, other.root});
                }
            }
            next.push_back(head);
        }
        plan.rounds.push_back(std::move(joins));
        pieces = std::move(next);
    }
    if (pieces.size() != 1) {
        throw std::logic_error("growth recipe did not end in a single object");
    }
    plan.core = pieces[0].root;
    return plan;
}

void emit_preparation(GraphCircuitBuilder &b, const ResourcePlan &plan, uint32_t offset) {
    for (uint32_t q = 0; q < plan.size; q++) {
        b.prepare(offset + q);
    }
}

void emit_round(GraphCircuitBuilder &b, const ResourcePlan &plan, size_t round, uint32_t offset) {
    for (const auto &j : plan.rounds[round]) {
        if (j.kind == GrowthRound::LINK) {
            b.cz(offset + j.a, offset + j.b);
        } else {
            b.merge(offset + j.a, offset + j.b);
        }
    }
}

BfsTree bfs_tree(const std::vector<std::vector<uint32_t>> &adj, uint32_t root) {
    constexpr uint32_t kFar = std::numeric_limits<uint32_t>::max();
    BfsTree t{std::vector<uint32_t>(adj.size(), kFar), std::vector<uint32_t>(adj.size(), kFar)};
    std::deque<uint32_t> queue{root};
    t.dist[root] = 0;
    t.parent[root] = root;
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : adj[v]) {
            if (t.dist[w] == kFar) {
                t.dist[w] = t.dist[v] + 1;
                t.parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return t;
}

std::array<std::vector<uint32_t>, 4> attempt_candidates(const GrowthStrategy &s, const ResourcePlan &plan,
                                                        const GraphCircuitBuilder &b, uint32_t offset) {
    auto tree = bfs_tree(b.adjacency(), offset + plan.core);
    uint64_t supply = leaves_per_direction(s);
    std::array<std::vector<uint32_t>, 4> out;
    if (s.kind == StrategyKind::STAR) {
        uint32_t i = 0;
        for (uint32_t q = 0; q < plan.size; q++) {
            if (q == plan.core) {
                continue;
            }
            auto &dir = out[i++ % 4];
            if (dir.size() < supply) {
                dir.push_back(offset + q);
            }
        }
        return out;
    }
    for (uint32_t q = 0; q < plan.size; q++) {
        uint8_t k = plan.arm[q];
        if (q == plan.arm_roots[k]) {
            continue;
        }
        if (s.kind == StrategyKind::SNOWFLAKE && b.neighbors(offset + q).size() != 1) {
            continue;
        }
        out[k].push_back(offset + q);
    }
    for (auto &dir : out) {
        if (s.kind == StrategyKind::SNOWFLAKE) {
            std::stable_sort(dir.begin(), dir.end(), [&](uint32_t x, uint32_t y) {
                return tree.dist[x] < tree.dist[y];
            });
        } else {
            std::stable_sort(dir.begin(), dir.end(), [&](uint32_t x, uint32_t y) {
                return tree.dist[x] > tree.dist[y];
            });
        }
        if (dir.size() != supply) {
            throw std::logic_error("resource supplies an unexpected number of attempt qubits");
        }
    }
    return out;
}

ResourceCircuit build_resource_circuit(const GrowthStrategy &s) {
    s.validate_growth();
    auto plan = plan_resource(s);
    GraphCircuitBuilder b(plan.size);
    emit_preparation(b, plan, 0);
    b.end_tick();
    for (size_t r = 0; r < plan.rounds.size(); r++) {
        emit_round(b, plan, r, 0);
        b.end_tick();
    }
    b.finish();
    ResourceCircuit out;
    out.graph = b.adjacency();
    out.ticks = b.ticks();
    out.core = plan.core;
    out.circuit = b.take_circuit();
    return out;
}

}  // namespace htpc
