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


#ifndef HTPC_GROWTH_ERROR_PROFILE_H
#define HTPC_GROWTH_ERROR_PROFILE_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "htpc/growth/node_window.h"
#include "htpc/growth/strategy.h"

namespace htpc {

enum class ProfileMethod : uint8_t {
    /// Exact odd-parity probability per heralded trace, from one backward pass.
    EXACT,
    /// Monte Carlo: sample every error location and push a Pauli frame forward.
    SAMPLED,
};

std::string_view profile_method_name(ProfileMethod m);
ProfileMethod profile_method_from_name(std::string_view name);

/// Per-node Pauli error rates after fusion and pruning.
///
/// p_x, p_z are marginals on the node's own core. The correlated rates count, to first order in
/// the fault probabilities, single faults that leave Z errors on two neighbouring cores of the
/// same sublattice (same) or on the node core plus a neighbouring core (cross). Z on all four
/// neighbours equals an X on the node (a stabilizer) and is counted modulo that equivalence.
struct NodeErrorProfile {
    double p_x = 0;
    double p_z = 0;
    double p_corr_same = 0;
    double p_corr_cross = 0;
    double bond_missing = 0;
    double p_z_ci_low = 0;
    double p_z_ci_high = 0;
    uint64_t traces = 0;
    ProfileMethod method = ProfileMethod::EXACT;
};

/// Fault-location classes: single-qubit gate (3 Paulis), two-qubit gate (15), memory step.
enum SiteClass : uint8_t { SITE_GATE1 = 0, SITE_GATE2 = 1, SITE_MEMORY = 2 };

/// Everything the exact method needs from one heralded trace, independent of p_G and p_M.
struct TraceSensitivity {
    /// z_hist[c][k]: number of class-c locations at which exactly k of the class's Paulis flip the
    /// node's Z observable. Same for x_hist.
    std::array<std::array<uint64_t, 16>, 3> z_hist{};
    std::array<std::array<uint64_t, 16>, 3> x_hist{};
    /// Sum over class-c locations of the fraction of Paulis causing a correlated event.
    std::array<double, 3> same{};
    std::array<double, 3> cross{};
    std::array<uint8_t, 4> bond_present{};
    uint32_t ticks = 0;
};

TraceSensitivity summarize_window(const NodeWindow &w, MemoryModel memory);

/// Probability that an odd number of the histogrammed locations fire a flipping Pauli.
double odd_flip_probability(const std::array<std::array<uint64_t, 16>, 3> &hist, double p_G, double p_M,
                            MemoryModel memory);

/// Heralded traces for one (strategy, p_h); evaluates profiles for any p_G, p_M.
struct ProfileModel {
    GrowthStrategy strategy;
    double p_h = 0;
    MemoryModel memory = MemoryModel::DEPHASING;
    std::vector<TraceSensitivity> traces;

    NodeErrorProfile evaluate(double p_G, double p_M) const;
    double p_z(double p_G, double p_M) const;
};

ProfileModel build_profile_model(const GrowthStrategy &s, double p_h, MemoryModel memory, uint32_t num_traces,
                                 uint64_t seed);

/// `shots` is the number of forward samples per trace for the sampled method (ignored otherwise).
/// The sampled method reports correlated rates as joint frequencies minus the coincidences that
/// independent marginals would produce, which matches the single-fault rates to first order.
NodeErrorProfile estimate_error_profile(const GrowthStrategy &s, const EOModel &eo, uint32_t num_traces,
                                        uint64_t seed, ProfileMethod method = ProfileMethod::EXACT,
                                        uint32_t shots = 1000);

}  // namespace htpc

#endif
