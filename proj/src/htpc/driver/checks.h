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


#ifndef HTPC_DRIVER_CHECKS_H
#define HTPC_DRIVER_CHECKS_H

#include <cstdint>
#include <string>
#include <vector>

namespace htpc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fixed Pauli-algebra identities plus randomized associativity and commutation checks.
std::vector<CheckResult> check_pauli_algebra(uint64_t seed);

/// Supercheck identity for the intact lattice and for every single missing bond, on each size.
CheckResult check_all_missing_bonds(const std::vector<uint32_t> &sizes);

/// Compares mwpm against exhaustive matching on random complete graphs with at most
/// `max_vertices` vertices.
CheckResult check_matching_exactness(uint32_t instances, uint32_t max_vertices, uint64_t seed);

}  // namespace htpc

#endif
