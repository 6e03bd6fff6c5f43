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

#ifndef HTPC_UTIL_RNG_H
#define HTPC_UTIL_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace htpc {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-mode seed derivation: the result depends only on the inputs, never on call order.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> counters) {
    uint64_t h = splitmix64(master);
    for (uint64_t c : counters) {
        h = splitmix64(h ^ splitmix64(c + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64 &rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64 &rng, double p) {
    return uniform01(rng) < p;
}

}  // namespace htpc

#endif
