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


#include "htpc/decoder/supercheck_graph.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace htpc {

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    std::vector<uint8_t> rank;

    explicit UnionFind(uint32_t n) : parent(n), rank(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (rank[a] < rank[b]) {
            std::swap(a, b);
        }
        parent[b] = a;
        if (rank[a] == rank[b]) {
            rank[a]++;
        }
    }
};

}  // namespace

SupercheckGraph form_superchecks(const ClusterLattice &lat, SublatticeKind kind, const LossMask &loss) {
    const Sublattice &s = lat.sublattice(kind);
    const auto &lost = loss.lost(kind);
    if (lost.size() != s.num_qubits()) {
        throw std::invalid_argument("loss mask does not match the lattice");
    }
    UnionFind uf(s.num_cells);
    for (uint32_t q = 0; q < s.num_qubits(); q++) {
        if (lost[q]) {
            uf.unite(s.qubit_cells[q][0], s.qubit_cells[q][1]);
        }
    }
    SupercheckGraph g;
    g.kind = kind;
    auto &part = g.partition;
    part.cell_cluster.assign(s.num_cells, 0);
    std::vector<int64_t> root_id(s.num_cells, -1);
    for (uint32_t c = 0; c < s.num_cells; c++) {
        uint32_t r = uf.find(c);
        if (root_id[r] < 0) {
            root_id[r] = part.num_clusters++;
        }
        part.cell_cluster[c] = (uint32_t)root_id[r];
    }
    std::vector<uint32_t> degree(part.num_clusters + 1, 0);
    for (uint32_t q = 0; q < s.num_qubits(); q++) {
        uint32_t a = part.cell_cluster[s.qubit_cells[q][0]];
        uint32_t b = part.cell_cluster[s.qubit_cells[q][1]];
        if (!lost[q] && a != b) {
            degree[a]++;
            degree[b]++;
        }
    }
    g.offsets.assign(part.num_clusters + 1, 0);
    for (uint32_t c = 0; c < part.num_clusters; c++) {
        g.offsets[c + 1] = g.offsets[c] + degree[c];
    }
    g.neighbor.resize(g.offsets.back());
    g.via_qubit.resize(g.offsets.back());
    std::vector<uint32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
    for (uint32_t q = 0; q < s.num_qubits(); q++) {
        uint32_t a = part.cell_cluster[s.qubit_cells[q][0]];
        uint32_t b = part.cell_cluster[s.qubit_cells[q][1]];
        if (lost[q] || a == b) {
            continue;
        }
        g.neighbor[fill[a]] = b;
        g.via_qubit[fill[a]++] = q;
        g.neighbor[fill[b]] = a;
        g.via_qubit[fill[b]++] = q;
    }
    return g;
}

std::vector<uint32_t> DefectGraph::path_qubits(size_t i, size_t j) const {
    std::vector<uint32_t> out;
    int32_t c = (int32_t)defects[j];
    int32_t target = (int32_t)defects[i];
    const auto &pq = pred_qubit[i];
    const auto &pc = pred_cluster[i];
    while (c != target) {
        if (pq[c] < 0) {
            throw std::logic_error("no recorded path between defects");
        }
        out.push_back((uint32_t)pq[c]);
        c = pc[c];
    }
    return out;
}

DefectGraph build_defect_graph(const SupercheckGraph &sg, const std::vector<uint32_t> &defect_clusters) {
    DefectGraph dg;
    dg.defects = defect_clusters;
    size_t n = defect_clusters.size();
    dg.weights = WeightMatrix(n);
    dg.pred_qubit.resize(n);
    dg.pred_cluster.resize(n);
    uint32_t nc = sg.num_clusters();
    std::vector<int32_t> defect_index(nc, -1);
    for (size_t i = 0; i < n; i++) {
        if (defect_clusters[i] >= nc) {
            throw std::out_of_range("defect cluster out of range");
        }
        defect_index[defect_clusters[i]] = (int32_t)i;
    }
    std::vector<int32_t> dist(nc);
    std::vector<uint32_t> queue;
    queue.reserve(nc);
    for (size_t i = 0; i < n; i++) {
        auto &pq = dg.pred_qubit[i];
        auto &pc = dg.pred_cluster[i];
        pq.assign(nc, -1);
        pc.assign(nc, -1);
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        uint32_t src = defect_clusters[i];
        dist[src] = 0;
        queue.push_back(src);
        size_t remaining = n - 1;
        for (size_t head = 0; head < queue.size() && remaining > 0; head++) {
            uint32_t c = queue[head];
            for (uint32_t k = sg.offsets[c]; k < sg.offsets[c + 1]; k++) {
                uint32_t d = sg.neighbor[k];
                if (dist[d] >= 0) {
                    continue;
                }
                dist[d] = dist[c] + 1;
                pq[d] = (int32_t)sg.via_qubit[k];
                pc[d] = (int32_t)c;
                queue.push_back(d);
                if (defect_index[d] >= 0) {
                    remaining--;
                }
            }
        }
        for (size_t j = 0; j < n; j++) {
            int32_t d = dist[defect_clusters[j]];
            if (d < 0) {
                throw std::logic_error("defect " + std::to_string(defect_clusters[j]) + " is unreachable from defect " +
                                       std::to_string(src));
            }
            if (j > i) {
                dg.weights.set(i, j, d);
            }
        }
    }
    return dg;
}

LogicalOutcome homology_of(const Sublattice &s, const std::vector<uint8_t> &chain) {
    LogicalOutcome out;
    for (uint32_t q = 0; q < s.num_qubits(); q++) {
        int a = s.qubit_cut_axis[q];
        if (a >= 0 && chain[q]) {
            out.h[a] ^= 1;
        }
    }
    return out;
}

CorrectionResult apply_correction_and_classify(const ClusterLattice &lat, const LossMask &loss,
                                               const ErrorMask &errors, const SupercheckGraph &sg,
                                               const DefectGraph &dg, const Matching &matching) {
    const Sublattice &s = lat.sublattice(sg.kind);
    const auto &lost = loss.lost(sg.kind);
    if (!is_perfect(matching, dg.size())) {
        throw std::logic_error("correction requires a perfect matching");
    }
    CorrectionResult result;
    auto &residual = result.residual;
    residual = errors.on(sg.kind);
    if (residual.size() != s.num_qubits()) {
        throw std::invalid_argument("error mask has no entries for the decoded sublattice");
    }
    for (auto [i, j] : matching.pairs) {
        for (uint32_t q : dg.path_qubits(i, j)) {
            residual[q] ^= 1;
        }
    }

    std::vector<uint8_t> parity(s.num_cells, 0);
    for (uint32_t q = 0; q < s.num_qubits(); q++) {
        if (residual[q]) {
            parity[s.qubit_cells[q][0]] ^= 1;
            parity[s.qubit_cells[q][1]] ^= 1;
        }
    }

    // Spanning forest over lost qubits, rooted at the lowest cell of each supercheck.
    std::vector<int32_t> tree_qubit(s.num_cells, -1);
    std::vector<int32_t> tree_parent(s.num_cells, -1);
    std::vector<uint8_t> visited(s.num_cells, 0);
    std::vector<uint32_t> order;
    order.reserve(s.num_cells);
    for (uint32_t root = 0; root < s.num_cells; root++) {
        if (visited[root]) {
            continue;
        }
        visited[root] = 1;
        size_t head = order.size();
        order.push_back(root);
        for (; head < order.size(); head++) {
            uint32_t c = order[head];
            for (uint32_t q : s.cell_qubits[c]) {
                if (!lost[q]) {
                    continue;
                }
                uint32_t other = s.qubit_cells[q][0] == c ? s.qubit_cells[q][1] : s.qubit_cells[q][0];
                if (!visited[other]) {
                    visited[other] = 1;
                    tree_qubit[other] = (int32_t)q;
                    tree_parent[other] = (int32_t)c;
                    order.push_back(other);
                }
            }
        }
    }
    for (size_t k = order.size(); k-- > 0;) {
        uint32_t c = order[k];
        if (!parity[c]) {
            continue;
        }
        if (tree_parent[c] < 0) {
            throw std::logic_error("residual boundary left in supercheck of cell " + std::to_string(c) +
                                   " after correction");
        }
        residual[tree_qubit[c]] ^= 1;
        parity[c] = 0;
        parity[tree_parent[c]] ^= 1;
    }
    result.outcome = homology_of(s, residual);
    return result;
}

}  // namespace htpc
