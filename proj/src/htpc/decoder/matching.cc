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


#include "htpc/decoder/matching.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "htpc/decoder/blossom.h"

namespace htpc {

namespace {

void require_even(size_t n) {
    if (n % 2 != 0) {
        throw std::invalid_argument("perfect matching needs an even number of defects, got " + std::to_string(n));
    }
}

void finish(Matching &m, const WeightMatrix &g) {
    std::sort(m.pairs.begin(), m.pairs.end());
    m.weight = 0;
    for (auto [i, j] : m.pairs) {
        m.weight += g(i, j);
    }
}

}  // namespace

Matching mwpm(const WeightMatrix &g) {
    require_even(g.n);
    Matching m;
    if (g.n == 0) {
        return m;
    }
    int64_t top = 0;
    for (int64_t x : g.w) {
        if (x < 0) {
            throw std::invalid_argument("matching weights must be non-negative");
        }
        top = std::max(top, x);
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(g.n * (g.n - 1) / 2);
    for (size_t i = 0; i < g.n; i++) {
        for (size_t j = i + 1; j < g.n; j++) {
            edges.push_back({(int32_t)i, (int32_t)j, top + 1 - g(i, j)});
        }
    }
    auto mate = max_weight_matching(edges, true);
    for (size_t i = 0; i < g.n; i++) {
        if (mate[i] < 0) {
            throw std::logic_error("blossom matcher returned an imperfect matching");
        }
        if ((size_t)mate[i] > i) {
            m.pairs.push_back({(uint32_t)i, (uint32_t)mate[i]});
        }
    }
    finish(m, g);
    return m;
}

Matching brute_force_matching(const WeightMatrix &g) {
    require_even(g.n);
    if (g.n > 12) {
        throw std::length_error("brute-force matching supports at most 12 defects, got " + std::to_string(g.n));
    }
    size_t n = g.n;
    std::vector<uint32_t> partner(n, 0);
    std::vector<uint32_t> best_partner;
    int64_t best = std::numeric_limits<int64_t>::max();
    std::vector<uint8_t> used(n, 0);
    auto recurse = [&](auto &&self, int64_t acc) -> void {
        size_t i = 0;
        while (i < n && used[i]) {
            i++;
        }
        if (i == n) {
            if (acc < best) {
                best = acc;
                best_partner = partner;
            }
            return;
        }
        used[i] = 1;
        for (size_t j = i + 1; j < n; j++) {
            if (used[j]) {
                continue;
            }
            used[j] = 1;
            partner[i] = (uint32_t)j;
            self(self, acc + g(i, j));
            used[j] = 0;
        }
        used[i] = 0;
    };
    recurse(recurse, 0);
    Matching m;
    if (n == 0) {
        return m;
    }
    std::vector<uint8_t> done(n, 0);
    for (size_t i = 0; i < n; i++) {
        if (!done[i]) {
            uint32_t j = best_partner[i];
            done[i] = done[j] = 1;
            m.pairs.push_back({(uint32_t)i, j});
        }
    }
    finish(m, g);
    return m;
}

bool is_perfect(const Matching &m, size_t n) {
    std::vector<int> seen(n, 0);
    for (auto [i, j] : m.pairs) {
        if (i >= n || j >= n || i == j) {
            return false;
        }
        seen[i]++;
        seen[j]++;
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

}  // namespace htpc
