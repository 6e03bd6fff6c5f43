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


#include "htpc/growth/graph_builder.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace htpc {

GraphCircuitBuilder::GraphCircuitBuilder(uint32_t n)
    : circuit_(n), adj_(n), live_(n, 0), touched_(n, 0), pending_idle_(n, 0) {
}

Circuit GraphCircuitBuilder::take_circuit() {
    return std::move(circuit_);
}

bool GraphCircuitBuilder::has_edge(uint32_t a, uint32_t b) const {
    return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end();
}

void GraphCircuitBuilder::touch(uint32_t q) {
    if (!live_[q]) {
        throw std::logic_error("operation on qubit " + std::to_string(q) + " which is not live");
    }
    if (pending_idle_[q] > 0) {
        circuit_.idle(q, pending_idle_[q]);
        pending_idle_[q] = 0;
    }
    if (!touched_[q]) {
        touched_[q] = 1;
        touched_list_.push_back(q);
    }
}

void GraphCircuitBuilder::add_edge(uint32_t a, uint32_t b) {
    if (a == b || has_edge(a, b)) {
        throw std::logic_error("edge already present");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
}

void GraphCircuitBuilder::remove_edge(uint32_t a, uint32_t b) {
    auto erase = [](std::vector<uint32_t> &v, uint32_t x) {
        auto it = std::find(v.begin(), v.end(), x);
        if (it == v.end()) {
            throw std::logic_error("edge missing");
        }
        *it = v.back();
        v.pop_back();
    };
    erase(adj_[a], b);
    erase(adj_[b], a);
}

void GraphCircuitBuilder::toggle_edge(uint32_t a, uint32_t b) {
    if (has_edge(a, b)) {
        remove_edge(a, b);
    } else {
        add_edge(a, b);
    }
}

void GraphCircuitBuilder::consume(uint32_t q) {
    while (!adj_[q].empty()) {
        remove_edge(q, adj_[q].back());
    }
    live_[q] = 0;
}

uint32_t GraphCircuitBuilder::only_other_neighbor(uint32_t v, uint32_t not_this) const {
    if (adj_[v].size() != 2) {
        throw std::logic_error("vertex " + std::to_string(v) + " is not on a path");
    }
    return adj_[v][0] == not_this ? adj_[v][1] : adj_[v][0];
}

void GraphCircuitBuilder::prepare(uint32_t q) {
    if (live_[q]) {
        throw std::logic_error("qubit " + std::to_string(q) + " prepared twice");
    }
    live_[q] = 1;
    live_list_.push_back(q);
    touch(q);
    circuit_.prepare_plus(q);
    circuit_.error_channel(q, NoiseClass::GATE);
}

void GraphCircuitBuilder::cz(uint32_t a, uint32_t b) {
    touch(a);
    touch(b);
    circuit_.cz(a, b);
    circuit_.error_channel(a, b, NoiseClass::GATE);
    toggle_edge(a, b);
}

void GraphCircuitBuilder::merge(uint32_t a, uint32_t b) {
    touch(a);
    touch(b);
    std::vector<uint32_t> nb = adj_[b];
    for (uint32_t w : nb) {
        if (w == a || has_edge(a, w)) {
            throw std::logic_error("merge requires disjoint neighbourhoods");
        }
    }
    circuit_.error_channel(a, b, NoiseClass::GATE);
    uint32_t m = circuit_.parity_projection(a, b);
    circuit_.gate(Gate::H, b);
    circuit_.error_channel(b, NoiseClass::GATE);
    std::vector<QubitPauli> fix{{b, 2}};
    for (uint32_t w : nb) {
        fix.push_back({w, 2});
    }
    circuit_.feedforward(m, fix);
    for (uint32_t w : nb) {
        remove_edge(b, w);
        add_edge(a, w);
    }
    add_edge(a, b);
}

void GraphCircuitBuilder::fuse_parity(uint32_t l, uint32_t lp) {
    if (adj_[lp].size() != 1 || adj_[l].size() != 1) {
        throw std::logic_error("parity fusion expects two leaves");
    }
    uint32_t pp = adj_[lp][0];
    touch(l);
    touch(lp);
    circuit_.error_channel(l, lp, NoiseClass::GATE);
    uint32_t s = circuit_.parity_projection(l, lp);
    QubitPauli fix_s{pp, 2};
    circuit_.feedforward(s, std::span<const QubitPauli>(&fix_s, 1));
    circuit_.error_channel(lp, NoiseClass::GATE);
    uint32_t t = circuit_.measure(lp, 'X');
    QubitPauli fix_t{l, 2};
    circuit_.feedforward(t, std::span<const QubitPauli>(&fix_t, 1));
    consume(lp);
    add_edge(l, pp);
}

void GraphCircuitBuilder::remove_z(uint32_t q, std::span<const uint8_t> skip) {
    touch(q);
    std::vector<QubitPauli> fix;
    for (uint32_t w : adj_[q]) {
        if (skip.empty() || !skip[w]) {
            fix.push_back({w, 2});
        }
    }
    circuit_.error_channel(q, NoiseClass::GATE);
    uint32_t m = circuit_.measure(q, 'Z');
    if (!fix.empty()) {
        circuit_.feedforward(m, fix);
    }
    consume(q);
}

void GraphCircuitBuilder::contract_pair(uint32_t u, uint32_t w) {
    if (!has_edge(u, w)) {
        throw std::logic_error("contract_pair needs adjacent vertices");
    }
    uint32_t a = only_other_neighbor(u, w);
    uint32_t b = only_other_neighbor(w, u);
    if (a == b || has_edge(a, b)) {
        throw std::logic_error("contract_pair would close a cycle");
    }
    touch(u);
    touch(w);
    circuit_.error_channel(u, NoiseClass::GATE);
    uint32_t mu = circuit_.measure(u, 'X');
    circuit_.error_channel(w, NoiseClass::GATE);
    uint32_t mw = circuit_.measure(w, 'X');
    QubitPauli fb{b, 2};
    QubitPauli fa{a, 2};
    circuit_.feedforward(mu, std::span<const QubitPauli>(&fb, 1));
    circuit_.feedforward(mw, std::span<const QubitPauli>(&fa, 1));
    consume(u);
    consume(w);
    add_edge(a, b);
}

void GraphCircuitBuilder::remove_y(uint32_t u) {
    if (adj_[u].size() != 2) {
        throw std::logic_error("remove_y needs a degree-2 vertex");
    }
    uint32_t a = adj_[u][0];
    uint32_t b = adj_[u][1];
    touch(u);
    touch(a);
    touch(b);
    circuit_.error_channel(u, NoiseClass::GATE);
    uint32_t m = circuit_.measure(u, 'Y');
    consume(u);
    for (uint32_t v : {a, b}) {
        circuit_.gate(Gate::S_DAG, v);
        circuit_.error_channel(v, NoiseClass::GATE);
    }
    QubitPauli fix[2] = {{a, 2}, {b, 2}};
    circuit_.feedforward(m, fix);
    toggle_edge(a, b);
}

void GraphCircuitBuilder::readout(uint32_t q) {
    touch(q);
    circuit_.error_channel(q, NoiseClass::GATE);
}

void GraphCircuitBuilder::end_tick() {
    size_t keep = 0;
    for (uint32_t q : live_list_) {
        if (!live_[q]) {
            continue;
        }
        live_list_[keep++] = q;
        if (!touched_[q]) {
            pending_idle_[q]++;
        }
    }
    live_list_.resize(keep);
    for (uint32_t q : touched_list_) {
        touched_[q] = 0;
    }
    touched_list_.clear();
    circuit_.tick();
    tick_++;
}

void GraphCircuitBuilder::finish() {
    for (uint32_t q : live_list_) {
        if (live_[q] && pending_idle_[q] > 0) {
            circuit_.idle(q, pending_idle_[q]);
            pending_idle_[q] = 0;
        }
    }
}

}  // namespace htpc
