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


#ifndef HTPC_DECODER_BLOSSOM_H
#define HTPC_DECODER_BLOSSOM_H

#include <cstdint>
#include <vector>

namespace htpc {

struct WeightedEdge {
    int32_t u;
    int32_t v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm with dual variables,
/// O(n^3)). With max_cardinality set, only maximum-cardinality matchings are considered.
///
/// All arithmetic is on 64-bit integers and exact. Returns mate[v] (or -1) for every vertex that
/// appears in `edges`. Self-loops are not allowed.
std::vector<int32_t> max_weight_matching(const std::vector<WeightedEdge> &edges, bool max_cardinality);

}  // namespace htpc

#endif
