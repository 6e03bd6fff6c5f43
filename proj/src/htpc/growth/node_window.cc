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


#include "htpc/growth/node_window.h"

#include <algorithm>
#include <stdexcept>

#include "htpc/growth/graph_builder.h"
#include "htpc/growth/resource.h"
#include "htpc/util/rng.h"

namespace htpc {

WindowTrace sample_window_trace(uint32_t attempts_N, double p_s, std::mt19937_64 &rng) {
    WindowTrace t;
    for (int k = 0; k < 4; k++) {
        t.attempts[k] = attempts_N;
        t.success[k] = 0;
        for (uint32_t a = 1; a <= attempts_N; a++) {
            if (bernoulli(rng, p_s)) {
                t.attempts[k] = a;
                t.success[k] = 1;
                break;
            }
        }
    }
    return t;
}

NodeWindow fuse_and_prune_node(const GrowthStrategy &s, const WindowTrace &trace) {
    s.validate();
    for (int k = 0; k < 4; k++) {
        if (trace.attempts[k] < 1 || trace.attempts[k] > s.attempts_N) {
            throw std::invalid_argument("trace attempt count out of range");
        }
    }
    ResourcePlan plan = plan_resource(s);
    uint32_t S = plan.size;
    GraphCircuitBuilder b(5 * S);
    NodeWindow w;

    for (uint32_t r = 0; r < 5; r++) {
        emit_preparation(b, plan, r * S);
    }
    b.end_tick();
    for (size_t round = 0; round < plan.rounds.size(); round++) {
        for (uint32_t r = 0; r < 5; r++) {
            emit_round(b, plan, round, r * S);
        }
        b.end_tick();
    }
    w.growth_ticks = b.ticks();

    std::array<std::array<std::vector<uint32_t>, 4>, 5> cand;
    std::array<BfsTree, 5> trees;
    for (uint32_t r = 0; r < 5; r++) {
        w.cores[r] = r * S + plan.core;
        cand[r] = attempt_candidates(s, plan, b, r * S);
        trees[r] = bfs_tree(b.adjacency(), w.cores[r]);
    }

    std::vector<uint8_t> keep(5 * S, 0);
    for (uint32_t c : w.cores) {
        keep[c] = 1;
    }
    auto keep_branch = [&](const BfsTree &t, uint32_t v) {
        while (!keep[v]) {
            keep[v] = 1;
            v = t.parent[v];
        }
    };

    uint32_t rounds = *std::max_element(trace.attempts.begin(), trace.attempts.end());
    for (uint32_t t = 0; t < rounds; t++) {
        for (int k = 0; k < 4; k++) {
            if (t >= trace.attempts[k]) {
                continue;
            }
            uint32_t l = cand[0][k][t];
            uint32_t lp = cand[k + 1][0][t];
            bool fused = trace.success[k] && t + 1 == trace.attempts[k];
            if (!fused) {
                b.remove_z(l);
                b.remove_z(lp);
                continue;
            }
            uint32_t span = trees[0].dist[l] + trees[k + 1].dist[lp];
            EOKind eo = s.fusion_eo;
            if (eo == EOKind::AUTO) {
                eo = span % 2 == 0 ? EOKind::CONTROL_PHASE : EOKind::PARITY_PROJECTION;
            }
            keep_branch(trees[0], l);
            if (eo == EOKind::CONTROL_PHASE) {
                b.cz(l, lp);
                keep_branch(trees[k + 1], lp);
            } else {
                keep_branch(trees[k + 1], trees[k + 1].parent[lp]);
                b.fuse_parity(l, lp);
            }
            w.bond_present[k] = 1;
        }
        b.end_tick();
    }

    std::vector<uint8_t> removing(5 * S, 0);
    for (uint32_t q = 0; q < 5 * S; q++) {
        removing[q] = b.live(q) && !keep[q];
    }
    for (uint32_t q = 0; q < 5 * S; q++) {
        if (removing[q]) {
            b.remove_z(q, removing);
        }
    }
    b.end_tick();

    for (int k = 0; k < 4; k++) {
        if (!w.bond_present[k]) {
            continue;
        }
        std::vector<uint32_t> path;
        uint32_t prev = w.cores[k + 1];
        uint32_t cur = b.neighbors(prev).at(0);
        while (cur != w.cores[0]) {
            path.push_back(cur);
            const auto &nb = b.neighbors(cur);
            if (nb.size() != 2) {
                throw std::logic_error("fusion path is not a simple path");
            }
            uint32_t next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        std::reverse(path.begin(), path.end());
        size_t i = 0;
        if (path.size() % 2 == 1) {
            b.remove_y(path[0]);
            i = 1;
        }
        for (; i < path.size(); i += 2) {
            b.contract_pair(path[i], path[i + 1]);
        }
    }
    b.end_tick();

    for (uint32_t c : w.cores) {
        b.readout(c);
    }
    b.end_tick();
    b.finish();
    w.ticks = b.ticks();
    w.final_graph = b.adjacency();
    w.circuit = b.take_circuit();
    return w;
}

}  // namespace htpc
