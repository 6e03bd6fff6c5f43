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


#ifndef HTPC_DECODER_DECODE_RUN_H
#define HTPC_DECODER_DECODE_RUN_H

#include <random>

#include "htpc/decoder/supercheck_graph.h"
#include "htpc/lattice/cluster_lattice.h"
#include "htpc/lattice/masks.h"

namespace htpc {

struct DecodeParams {
    /// Probability that a bond is missing; both endpoints become lost.
    double p_bond = 0;
    /// Direct qubit loss probability, applied on top of bond losses.
    double p_loss = 0;
    /// Z error probability on intact qubits.
    double p_err = 0;
    /// Per-cell probability of a correlated two-face error (off unless set).
    double p_pair = 0;
    /// Decode the dual sublattice as well; a trial fails if either side fails.
    bool simulate_dual = false;
};

struct DecodeResult {
    bool success = true;
    LogicalOutcome primal;
    LogicalOutcome dual;
    size_t num_defects = 0;
};

/// Decodes one sublattice given fixed loss and error masks.
LogicalOutcome decode_sublattice(const ClusterLattice &lat, SublatticeKind kind, const LossMask &loss,
                                 const ErrorMask &errors, size_t *num_defects = nullptr);

/// One end-to-end Monte Carlo trial: sample loss and errors, decode, classify.
DecodeResult decode_trial(const ClusterLattice &lat, const DecodeParams &params, std::mt19937_64 &rng);

inline bool decode_run(const ClusterLattice &lat, const DecodeParams &params, std::mt19937_64 &rng) {
    return decode_trial(lat, params, rng).success;
}

}  // namespace htpc

#endif
