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


#ifndef HTPC_GROWTH_GRAPH_BUILDER_H
#define HTPC_GROWTH_GRAPH_BUILDER_H

#include <cstdint>
#include <span>
#include <vector>

#include "htpc/pauli/circuit.h"

namespace htpc {

/// Emits graph-state manipulation circuits while tracking the ideal graph.
///
/// Every primitive inserts its gate-class error locations (after preparations and unitaries,
/// before measurements) and the outcome-conditioned Pauli corrections that restore the tracked
/// graph state exactly. Time advances with end_tick(); a live qubit that is not touched during a
/// tick accrues one memory location, emitted lazily as an IDLE op right before its next use.
class GraphCircuitBuilder {
   public:
    explicit GraphCircuitBuilder(uint32_t num_qubits);

    const Circuit &circuit() const {
        return circuit_;
    }
    Circuit take_circuit();
    const std::vector<std::vector<uint32_t>> &adjacency() const {
        return adj_;
    }
    const std::vector<uint32_t> &neighbors(uint32_t q) const {
        return adj_[q];
    }
    bool live(uint32_t q) const {
        return live_[q];
    }
    bool has_edge(uint32_t a, uint32_t b) const;
    uint32_t ticks() const {
        return tick_;
    }

    /// |+> preparation.
    void prepare(uint32_t q);
    /// CZ between two live qubits; toggles the edge.
    void cz(uint32_t a, uint32_t b);
    /// Parity projection of a and b followed by H on b. On success b becomes a leaf of a and a
    /// takes over all former neighbours of b. The neighbourhoods must be disjoint.
    void merge(uint32_t a, uint32_t b);
    /// Parity-projection fusion of leaf l with leaf lp: l takes over the neighbour of lp, lp is
    /// measured out.
    void fuse_parity(uint32_t l, uint32_t lp);
    /// Z-measurement removal. Corrections go to current neighbours not flagged in `skip`.
    void remove_z(uint32_t q, std::span<const uint8_t> skip = {});
    /// X-measures adjacent degree-2 vertices u, w on a path a-u-w-b, leaving the edge a-b.
    void contract_pair(uint32_t u, uint32_t w);
    /// Y-measures a degree-2 vertex a-u-b, leaving the edge a-b.
    void remove_y(uint32_t u);
    /// Error location standing for the final single-qubit readout.
    void readout(uint32_t q);

    void end_tick();
    /// Flushes pending memory locations for all still-live qubits.
    void finish();

   private:
    void touch(uint32_t q);
    void add_edge(uint32_t a, uint32_t b);
    void remove_edge(uint32_t a, uint32_t b);
    void toggle_edge(uint32_t a, uint32_t b);
    void consume(uint32_t q);
    uint32_t only_other_neighbor(uint32_t v, uint32_t not_this) const;

    Circuit circuit_;
    std::vector<std::vector<uint32_t>> adj_;
    std::vector<uint8_t> live_;
    std::vector<uint8_t> touched_;
    std::vector<uint32_t> pending_idle_;
    std::vector<uint32_t> live_list_;
    std::vector<uint32_t> touched_list_;
    uint32_t tick_ = 0;
};

}  // namespace htpc

#endif
