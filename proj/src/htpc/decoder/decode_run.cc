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


#include "htpc/decoder/decode_run.h"

#include <stdexcept>
#include <string>

namespace htpc {

LogicalOutcome decode_sublattice(const ClusterLattice &lat, SublatticeKind kind, const LossMask &loss,
                                 const ErrorMask &errors, size_t *num_defects) {
    SupercheckGraph sg = form_superchecks(lat, kind, loss);
    Syndrome syn = extract_syndrome(lat, kind, loss, errors, sg.partition);
    DefectGraph dg = build_defect_graph(sg, syn.defect_clusters());
    if (num_defects) {
        *num_defects += dg.size();
    }
    Matching m = mwpm(dg.weights);
    return apply_correction_and_classify(lat, loss, errors, sg, dg, m).outcome;
}

DecodeResult decode_trial(const ClusterLattice &lat, const DecodeParams &params, std::mt19937_64 &rng) {
    if (!(params.p_err >= 0 && params.p_err <= 0.5)) {
        throw std::invalid_argument("p_err must be in [0, 0.5], got " + std::to_string(params.p_err));
    }
    LossMask loss = sample_bonds(lat, params.p_bond, rng);
    if (params.p_loss > 0) {
        LossMask extra = inject_losses(lat, params.p_loss, rng, params.simulate_dual);
        for (size_t q = 0; q < extra.lost_primal.size(); q++) {
            loss.lost_primal[q] |= extra.lost_primal[q];
            loss.lost_dual[q] |= extra.lost_dual[q];
        }
    } else if (!(params.p_loss >= 0 && params.p_loss <= 1)) {
        throw std::invalid_argument("p_loss must be in [0, 1], got " + std::to_string(params.p_loss));
    }
    ErrorMask errors = sample_errors(lat, loss, params.p_err, rng, params.simulate_dual);
    if (params.p_pair > 0) {
        inject_correlated_pairs(lat, SublatticeKind::PRIMAL, params.p_pair, rng, errors);
        if (params.simulate_dual) {
            inject_correlated_pairs(lat, SublatticeKind::DUAL, params.p_pair, rng, errors);
        }
    }
    DecodeResult r;
    r.primal = decode_sublattice(lat, SublatticeKind::PRIMAL, loss, errors, &r.num_defects);
    r.success = r.primal.success();
    if (params.simulate_dual) {
        r.dual = decode_sublattice(lat, SublatticeKind::DUAL, loss, errors, &r.num_defects);
        r.success = r.success && r.dual.success();
    }
    return r;
}

}  // namespace htpc
