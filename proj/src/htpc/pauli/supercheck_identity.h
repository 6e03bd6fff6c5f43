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


#ifndef HTPC_PAULI_SUPERCHECK_IDENTITY_H
#define HTPC_PAULI_SUPERCHECK_IDENTITY_H

#include <cstdint>
#include <optional>
#include <string>

#include "htpc/lattice/cluster_lattice.h"

namespace htpc {

struct SupercheckReport {
    /// Every cell check built from the cluster stabilizers equals the ideal X-check, times Z on the
    /// opposite endpoint for the cells touching the missing bond.
    bool damaged_checks_ok = true;
    /// The product of the two damaged checks around each lost qubit has no support on either endpoint.
    bool superchecks_ok = true;
    uint32_t cells_checked = 0;
    std::string detail;

    bool ok() const {
        return damaged_checks_ok && superchecks_ok;
    }
};

/// Builds the cluster state of `lat` on a stabilizer tableau, omitting `missing_bond` if given, and
/// checks the damaged-check and supercheck identities on both sublattices.
/// Throws std::out_of_range if the bond index is invalid.
SupercheckReport check_supercheck_identity(const ClusterLattice &lat, std::optional<uint32_t> missing_bond);

inline bool verify_supercheck_identity(const ClusterLattice &lat, std::optional<uint32_t> missing_bond) {
    return check_supercheck_identity(lat, missing_bond).ok();
}

}  // namespace htpc

#endif
