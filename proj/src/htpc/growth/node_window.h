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


#ifndef HTPC_GROWTH_NODE_WINDOW_H
#define HTPC_GROWTH_NODE_WINDOW_H

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "htpc/growth/strategy.h"
#include "htpc/pauli/circuit.h"

namespace htpc {

/// Heralded fusion outcomes for the four bonds of one node.
struct WindowTrace {
    /// Attempts made toward each neighbour (1..N).
    std::array<uint32_t, 4> attempts{1, 1, 1, 1};
    /// Whether the last attempt succeeded.
    std::array<uint8_t, 4> success{1, 1, 1, 1};
};

WindowTrace sample_window_trace(uint32_t attempts_N, double p_s, std::mt19937_64 &rng);

/// Circuit for one lattice node R0 and its four neighbouring resources: growth of all five, up to
/// N sequential fusion attempts per bond, removal of every qubit off the successful fusion paths,
/// contraction of those paths, and a readout location on each core.
struct NodeWindow {
    Circuit circuit;
    /// cores[0] is the node itself, cores[1 + k] the neighbour across bond k.
    std::array<uint32_t, 5> cores{};
    std::array<uint8_t, 4> bond_present{};
    /// Ideal graph on the surviving qubits at the end.
    std::vector<std::vector<uint32_t>> final_graph;
    uint32_t ticks = 0;
    uint32_t growth_ticks = 0;
};

NodeWindow fuse_and_prune_node(const GrowthStrategy &s, const WindowTrace &trace);

}  // namespace htpc

#endif
