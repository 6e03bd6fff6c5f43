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


#ifndef HTPC_DECODER_MATCHING_H
#define HTPC_DECODER_MATCHING_H

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace htpc {

/// Complete graph on defects with symmetric non-negative integer weights.
struct WeightMatrix {
    size_t n = 0;
    std::vector<int64_t> w;

    WeightMatrix() = default;
    explicit WeightMatrix(size_t n) : n(n), w(n * n, 0) {
    }
    int64_t operator()(size_t i, size_t j) const {
        return w[i * n + j];
    }
    void set(size_t i, size_t j, int64_t value) {
        w[i * n + j] = value;
        w[j * n + i] = value;
    }
};

struct Matching {
    /// Pairs (i, j) with i < j, sorted by i.
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    int64_t weight = 0;
};

/// Exact minimum-weight perfect matching via the blossom algorithm.
/// Throws std::invalid_argument for an odd number of vertices.
Matching mwpm(const WeightMatrix &g);

/// Exhaustive minimum over all perfect matchings; the first minimum in lexicographic enumeration
/// order wins ties. Throws std::invalid_argument for odd n and std::length_error for n > 12.
Matching brute_force_matching(const WeightMatrix &g);

/// Checks that every vertex appears in exactly one pair.
bool is_perfect(const Matching &m, size_t n);

}  // namespace htpc

#endif
