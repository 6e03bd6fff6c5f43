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


#ifndef HTPC_DECODER_SUPERCHECK_GRAPH_H
#define HTPC_DECODER_SUPERCHECK_GRAPH_H

#include <array>
#include <cstdint>
#include <vector>

#include "htpc/decoder/matching.h"
#include "htpc/lattice/cluster_lattice.h"
#include "htpc/lattice/masks.h"

namespace htpc {

/// Cells of one sublattice merged along lost qubits, with the intact qubits as weight-1 edges
/// between the resulting clusters. Intact qubits whose two cells fell into the same cluster are
/// self-loops and are left out of the adjacency.
struct SupercheckGraph {
    SublatticeKind kind = SublatticeKind::PRIMAL;
    SupercheckPartition partition;
    /// CSR adjacency: entries [offsets[c], offsets[c+1]) list (neighbor cluster, qubit) pairs in
    /// ascending qubit order.
    std::vector<uint32_t> offsets;
    std::vector<uint32_t> neighbor;
    std::vector<uint32_t> via_qubit;

    uint32_t num_clusters() const {
        return partition.num_clusters;
    }
};

SupercheckGraph form_superchecks(const ClusterLattice &lat, SublatticeKind kind, const LossMask &loss);

/// Shortest-path distances between defect clusters, with predecessor trees for path recovery.
struct DefectGraph {
    std::vector<uint32_t> defects;
    WeightMatrix weights;
    /// For defect i, pred_qubit[i][c] is the qubit through which BFS from defect i first reached
    /// cluster c (or -1), and pred_cluster[i][c] is the cluster on the other side of that qubit.
    std::vector<std::vector<int32_t>> pred_qubit;
    std::vector<std::vector<int32_t>> pred_cluster;

    size_t size() const {
        return defects.size();
    }
    /// Qubits along the recorded shortest path between defects i and j.
    std::vector<uint32_t> path_qubits(size_t i, size_t j) const;
};

/// Breadth-first search from every defect. Throws std::logic_error if some defect cannot reach
/// another.
DefectGraph build_defect_graph(const SupercheckGraph &sg, const std::vector<uint32_t> &defect_clusters);

struct LogicalOutcome {
    /// Crossing parity of the closed residual through the cut plane of each axis.
    std::array<uint8_t, 3> h{0, 0, 0};

    bool success() const {
        return h[0] == 0 && h[1] == 0 && h[2] == 0;
    }
};

/// Residual chain after correction, closed into a cycle inside each supercheck.
struct CorrectionResult {
    LogicalOutcome outcome;
    std::vector<uint8_t> residual;
};

/// Applies the matched shortest paths to the errors, closes the residual inside each supercheck
/// along a fixed spanning forest of lost qubits, and reads off the homology class.
CorrectionResult apply_correction_and_classify(const ClusterLattice &lat, const LossMask &loss,
                                               const ErrorMask &errors, const SupercheckGraph &sg,
                                               const DefectGraph &dg, const Matching &matching);

/// Crossing parity of a chain through the three cut planes of the sublattice.
LogicalOutcome homology_of(const Sublattice &s, const std::vector<uint8_t> &chain);

}  // namespace htpc

#endif
