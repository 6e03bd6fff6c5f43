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


#include "htpc/growth/grow.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "htpc/util/rng.h"

namespace htpc {

namespace {

struct Piece {
    std::vector<std::vector<uint32_t>> adj;
    uint32_t root = 0;
    uint32_t end = 0;
};

void check_p_h(double p_h) {
    if (!(p_h >= 0 && p_h <= 1)) {
        throw std::invalid_argument("p_h must be in [0, 1]");
    }
    if (p_h >= 1) {
        throw std::domain_error("no resource can be completed at p_h = 1");
    }
}

uint32_t append(Piece &dst, const Piece &src) {
    uint32_t off = (uint32_t)dst.adj.size();
    for (const auto &nb : src.adj) {
        dst.adj.emplace_back();
        for (uint32_t w : nb) {
            dst.adj.back().push_back(w + off);
        }
    }
    return off;
}

void link(Piece &p, uint32_t a, uint32_t b) {
    p.adj[a].push_back(b);
    p.adj[b].push_back(a);
}

class ExplicitGrower {
   public:
    ExplicitGrower(const GrowthStrategy &s, double p_h, std::mt19937_64 &rng)
        : s_(s), recipe_(growth_recipe(s)), p_s_(1 - p_h), rng_(rng) {
    }

    Piece grow(size_t level, GrowthRunStats &st) {
        if (level == 0) {
            st.raw_qubits++;
            return Piece{{{}}, 0, 0};
        }
        const auto &round = recipe_[level - 1];
        while (true) {
            std::vector<Piece> parts;
            for (uint32_t i = 0; i < round.arity; i++) {
                parts.push_back(grow(level - 1, st));
            }
            bool ok = true;
            for (uint32_t i = 1; i < round.arity && ok; i++) {
                st.eo_attempts++;
                if (!bernoulli(rng_, p_s_)) {
                    st.eo_failures++;
                    ok = false;
                }
            }
            if (!ok) {
                st.abandoned_objects += round.arity;
                continue;
            }
            Piece out = std::move(parts[0]);
            for (uint32_t i = 1; i < round.arity; i++) {
                uint32_t off = append(out, parts[i]);
                uint32_t other_root = parts[i].root + off;
                if (round.kind == GrowthRound::MERGE) {
                    for (uint32_t w : std::vector<uint32_t>(out.adj[other_root])) {
                        auto &v = out.adj[w];
                        v.erase(std::find(v.begin(), v.end(), other_root));
                        link(out, out.root, w);
                    }
                    out.adj[other_root].clear();
                    link(out, out.root, other_root);
                } else if (s_.kind == StrategyKind::CROSS) {
                    link(out, out.end, other_root);
                    out.end = parts[i].end + off;
                } else {
                    link(out, out.root, other_root);
                }
            }
            return out;
        }
    }

   private:
    const GrowthStrategy &s_;
    std::vector<GrowthRound> recipe_;
    double p_s_;
    std::mt19937_64 &rng_;
};

}  // namespace

GrowthRunStats sample_growth_cost(const GrowthStrategy &s, double p_h, std::mt19937_64 &rng) {
    check_p_h(p_h);
    s.validate_growth();
    auto recipe = growth_recipe(s);
    GrowthRunStats st;
    st.growth_rounds = (uint32_t)recipe.size();
    // needed: number of completed objects required at the current level.
    uint64_t needed = 1;
    for (size_t r = recipe.size(); r-- > 0;) {
        const auto &round = recipe[r];
        double q = std::pow(1 - p_h, (double)(round.arity - 1));
        uint64_t failed_groups = 0;
        if (q < 1) {
            std::negative_binomial_distribution<uint64_t> nb(needed, q);
            failed_groups = nb(rng);
        }
        uint64_t groups = needed + failed_groups;
        if (round.arity > 1 && q < 1) {
            uint64_t attempts_in_failed = 0;
            if (round.arity == 2) {
                attempts_in_failed = failed_groups;
            } else {
                // A failed group stops at its first failed EO.
                double ps = 1 - p_h;
                std::vector<double> w;
                for (uint32_t k = 1; k < round.arity; k++) {
                    w.push_back(std::pow(ps, k - 1.0) * p_h);
                }
                std::discrete_distribution<uint32_t> dist(w.begin(), w.end());
                for (uint64_t g = 0; g < failed_groups; g++) {
                    attempts_in_failed += 1 + dist(rng);
                }
            }
            st.eo_attempts += needed * (round.arity - 1) + attempts_in_failed;
            st.eo_failures += failed_groups;
        } else {
            st.eo_attempts += needed * (round.arity - 1);
        }
        st.abandoned_objects += failed_groups * round.arity;
        needed = groups * round.arity;
    }
    st.raw_qubits = needed;
    return st;
}

GrownResource grow_resource(const GrowthStrategy &s, double p_h, std::mt19937_64 &rng, double explicit_limit) {
    check_p_h(p_h);
    s.validate_growth();
    GrownResource out;
    if (expected_cost(s, p_h) > explicit_limit) {
        out.stats = sample_growth_cost(s, p_h, rng);
        return out;
    }
    ExplicitGrower g(s, p_h, rng);
    auto recipe = growth_recipe(s);
    Piece p = g.grow(recipe.size(), out.stats);
    out.stats.growth_rounds = (uint32_t)recipe.size();
    out.graph = std::move(p.adj);
    out.core = p.root;
    return out;
}

std::string canonical_rooted_tree(const std::vector<std::vector<uint32_t>> &graph, uint32_t root) {
    size_t edges = 0;
    for (const auto &nb : graph) {
        edges += nb.size();
    }
    if (graph.empty() || edges != 2 * (graph.size() - 1)) {
        throw std::invalid_argument("graph is not a tree");
    }
    std::vector<uint8_t> seen(graph.size(), 0);
    std::function<std::string(uint32_t)> encode = [&](uint32_t v) {
        seen[v] = 1;
        std::vector<std::string> kids;
        for (uint32_t w : graph[v]) {
            if (!seen[w]) {
                kids.push_back(encode(w));
            }
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto &k : kids) {
            s += k;
        }
        return s + ")";
    };
    std::string code = encode(root);
    if (std::count(seen.begin(), seen.end(), 1) != (long)graph.size()) {
        throw std::invalid_argument("graph is not connected");
    }
    return code;
}

}  // namespace htpc
