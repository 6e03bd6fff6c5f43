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


#ifndef HTPC_LATTICE_MASKS_H
#define HTPC_LATTICE_MASKS_H

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "htpc/lattice/cluster_lattice.h"

namespace htpc {

/// Missing bonds and lost qubits, one byte flag per element.
struct LossMask {
    std::vector<uint8_t> missing_bonds;
    std::vector<uint8_t> lost_primal;
    std::vector<uint8_t> lost_dual;

    static LossMask none(const ClusterLattice &lat);

    const std::vector<uint8_t> &lost(SublatticeKind k) const {
        return k == SublatticeKind::PRIMAL ? lost_primal : lost_dual;
    }
    std::vector<uint8_t> &lost(SublatticeKind k) {
        return k == SublatticeKind::PRIMAL ? lost_primal : lost_dual;
    }
    size_t num_lost(SublatticeKind k) const;
    size_t num_missing_bonds() const;
};

/// Z error flags per qubit. The dual vector is empty when only the primal side was sampled.
struct ErrorMask {
    std::vector<uint8_t> primal;
    std::vector<uint8_t> dual;

    static ErrorMask none(const ClusterLattice &lat);

    const std::vector<uint8_t> &on(SublatticeKind k) const {
        return k == SublatticeKind::PRIMAL ? primal : dual;
    }
    std::vector<uint8_t> &on(SublatticeKind k) {
        return k == SublatticeKind::PRIMAL ? primal : dual;
    }
};

/// Cells grouped into superchecks: cell_cluster[c] is a dense cluster id in [0, num_clusters).
struct SupercheckPartition {
    std::vector<uint32_t> cell_cluster;
    uint32_t num_clusters = 0;
};

struct Syndrome {
    /// Defect flag per supercheck cluster.
    std::vector<uint8_t> defects;

    std::vector<uint32_t> defect_clusters() const;
    size_t num_defects() const;
};

/// Each bond is missing independently with probability p; both endpoints of a missing bond are lost.
LossMask sample_bonds(const ClusterLattice &lat, double p, std::mt19937_64 &rng);

/// Loses primal qubits (and dual qubits when include_dual is set) independently with probability p,
/// without touching bonds.
LossMask inject_losses(const ClusterLattice &lat, double p, std::mt19937_64 &rng, bool include_dual = false);

/// Intact qubits flip with p_err, lost qubits with 1/2.
ErrorMask sample_errors(const ClusterLattice &lat, const LossMask &loss, double p_err, std::mt19937_64 &rng,
                        bool include_dual = false);

/// For each cell of sublattice k, with probability p_pair flips two distinct faces of that cell chosen
/// uniformly at random.
void inject_correlated_pairs(const ClusterLattice &lat, SublatticeKind k, double p_pair, std::mt19937_64 &rng,
                             ErrorMask &errors);

/// Defect flag per supercheck: parity of the errors on intact faces bounding the merged cells.
/// Faces shared by two cells of the same supercheck cancel. Throws std::logic_error if a lost qubit
/// straddles two different superchecks.
Syndrome extract_syndrome(const ClusterLattice &lat, SublatticeKind k, const LossMask &loss, const ErrorMask &errors,
                          const SupercheckPartition &partition);

/// Line-oriented trial dump:
///
///     L <size>
///     bond <index>          (one line per missing bond)
///     lost_primal <index>
///     lost_dual <index>
///     error_primal <index>
///     error_dual <index>
///
/// Lines are written in that order with ascending indices. Blank lines and lines starting with '#'
/// are ignored when reading.
void write_trial_dump(std::ostream &out, const ClusterLattice &lat, const LossMask &loss, const ErrorMask &errors);
void read_trial_dump(std::istream &in, const ClusterLattice &lat, LossMask &loss, ErrorMask &errors);

}  // namespace htpc

#endif
