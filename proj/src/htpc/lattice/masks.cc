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


#include "htpc/lattice/masks.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "htpc/util/rng.h"

namespace htpc {

namespace {

void check_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
    }
}

size_t count_set(const std::vector<uint8_t> &v) {
    size_t n = 0;
    for (uint8_t b : v) {
        n += b != 0;
    }
    return n;
}

}  // namespace

LossMask LossMask::none(const ClusterLattice &lat) {
    LossMask m;
    m.missing_bonds.assign(lat.num_bonds(), 0);
    m.lost_primal.assign(lat.num_primal_qubits(), 0);
    m.lost_dual.assign(lat.num_dual_qubits(), 0);
    return m;
}

size_t LossMask::num_lost(SublatticeKind k) const {
    return count_set(lost(k));
}

size_t LossMask::num_missing_bonds() const {
    return count_set(missing_bonds);
}

ErrorMask ErrorMask::none(const ClusterLattice &lat) {
    ErrorMask e;
    e.primal.assign(lat.num_primal_qubits(), 0);
    e.dual.assign(lat.num_dual_qubits(), 0);
    return e;
}

std::vector<uint32_t> Syndrome::defect_clusters() const {
    std::vector<uint32_t> out;
    for (uint32_t c = 0; c < defects.size(); c++) {
        if (defects[c]) {
            out.push_back(c);
        }
    }
    return out;
}

size_t Syndrome::num_defects() const {
    return count_set(defects);
}

LossMask sample_bonds(const ClusterLattice &lat, double p, std::mt19937_64 &rng) {
    check_probability(p, "bond missing probability");
    LossMask m = LossMask::none(lat);
    if (p == 0) {
        return m;
    }
    const auto &bonds = lat.bonds();
    for (uint32_t b = 0; b < bonds.size(); b++) {
        if (bernoulli(rng, p)) {
            m.missing_bonds[b] = 1;
            m.lost_primal[bonds[b].primal] = 1;
            m.lost_dual[bonds[b].dual] = 1;
        }
    }
    return m;
}

LossMask inject_losses(const ClusterLattice &lat, double p, std::mt19937_64 &rng, bool include_dual) {
    check_probability(p, "qubit loss probability");
    LossMask m = LossMask::none(lat);
    if (p == 0) {
        return m;
    }
    for (auto &f : m.lost_primal) {
        f = bernoulli(rng, p);
    }
    if (include_dual) {
        for (auto &f : m.lost_dual) {
            f = bernoulli(rng, p);
        }
    }
    return m;
}

ErrorMask sample_errors(const ClusterLattice &lat, const LossMask &loss, double p_err, std::mt19937_64 &rng,
                        bool include_dual) {
    if (!(p_err >= 0 && p_err <= 0.5)) {
        throw std::invalid_argument("error probability must be in [0, 0.5], got " + std::to_string(p_err));
    }
    ErrorMask e;
    auto fill = [&](const std::vector<uint8_t> &lost, std::vector<uint8_t> &out, uint32_t n) {
        out.assign(n, 0);
        for (uint32_t q = 0; q < n; q++) {
            if (lost[q]) {
                out[q] = rng() >> 63;
            } else if (p_err > 0) {
                out[q] = bernoulli(rng, p_err);
            }
        }
    };
    fill(loss.lost_primal, e.primal, lat.num_primal_qubits());
    if (include_dual) {
        fill(loss.lost_dual, e.dual, lat.num_dual_qubits());
    }
    return e;
}

void inject_correlated_pairs(const ClusterLattice &lat, SublatticeKind k, double p_pair, std::mt19937_64 &rng,
                             ErrorMask &errors) {
    check_probability(p_pair, "correlated pair probability");
    if (p_pair == 0) {
        return;
    }
    const Sublattice &s = lat.sublattice(k);
    auto &target = errors.on(k);
    if (target.size() != s.num_qubits()) {
        throw std::invalid_argument("error mask has no entries for the requested sublattice");
    }
    for (uint32_t c = 0; c < s.num_cells; c++) {
        if (!bernoulli(rng, p_pair)) {
            continue;
        }
        uint32_t a = (uint32_t)(rng() % 6);
        uint32_t b = (uint32_t)(rng() % 5);
        if (b >= a) {
            b++;
        }
        target[s.cell_qubits[c][a]] ^= 1;
        target[s.cell_qubits[c][b]] ^= 1;
    }
}

Syndrome extract_syndrome(const ClusterLattice &lat, SublatticeKind k, const LossMask &loss, const ErrorMask &errors,
                          const SupercheckPartition &partition) {
    const Sublattice &s = lat.sublattice(k);
    const auto &lost = loss.lost(k);
    const auto &err = errors.on(k);
    if (partition.cell_cluster.size() != s.num_cells) {
        throw std::logic_error("supercheck partition does not cover the lattice cells");
    }
    if (err.size() != s.num_qubits()) {
        throw std::invalid_argument("error mask has no entries for the requested sublattice");
    }
    Syndrome syn;
    syn.defects.assign(partition.num_clusters, 0);
    for (uint32_t q = 0; q < s.num_qubits(); q++) {
        uint32_t ca = partition.cell_cluster[s.qubit_cells[q][0]];
        uint32_t cb = partition.cell_cluster[s.qubit_cells[q][1]];
        if (lost[q]) {
            if (ca != cb) {
                throw std::logic_error("lost qubit " + std::to_string(q) + " borders two different superchecks");
            }
            continue;
        }
        if (err[q] && ca != cb) {
            syn.defects[ca] ^= 1;
            syn.defects[cb] ^= 1;
        }
    }
    return syn;
}

void write_trial_dump(std::ostream &out, const ClusterLattice &lat, const LossMask &loss, const ErrorMask &errors) {
    out << "L " << lat.size() << "\n";
    auto emit = [&](const char *tag, const std::vector<uint8_t> &flags) {
        for (size_t i = 0; i < flags.size(); i++) {
            if (flags[i]) {
                out << tag << " " << i << "\n";
            }
        }
    };
    emit("bond", loss.missing_bonds);
    emit("lost_primal", loss.lost_primal);
    emit("lost_dual", loss.lost_dual);
    emit("error_primal", errors.primal);
    emit("error_dual", errors.dual);
}

void read_trial_dump(std::istream &in, const ClusterLattice &lat, LossMask &loss, ErrorMask &errors) {
    loss = LossMask::none(lat);
    errors = ErrorMask::none(lat);
    std::string line;
    size_t line_no = 0;
    bool saw_size = false;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        uint64_t index = 0;
        if (!(ls >> tag >> index)) {
            throw std::invalid_argument("trial dump line " + std::to_string(line_no) + " is malformed");
        }
        std::vector<uint8_t> *target = nullptr;
        if (tag == "L") {
            if (index != lat.size()) {
                throw std::invalid_argument("trial dump is for L=" + std::to_string(index) + ", lattice has L=" +
                                            std::to_string(lat.size()));
            }
            saw_size = true;
            continue;
        } else if (tag == "bond") {
            target = &loss.missing_bonds;
        } else if (tag == "lost_primal") {
            target = &loss.lost_primal;
        } else if (tag == "lost_dual") {
            target = &loss.lost_dual;
        } else if (tag == "error_primal") {
            target = &errors.primal;
        } else if (tag == "error_dual") {
            target = &errors.dual;
        } else {
            throw std::invalid_argument("trial dump line " + std::to_string(line_no) + " has unknown tag '" + tag + "'");
        }
        if (index >= target->size()) {
            throw std::out_of_range("trial dump line " + std::to_string(line_no) + " index out of range");
        }
        (*target)[index] = 1;
    }
    if (!saw_size) {
        throw std::invalid_argument("trial dump has no 'L' line");
    }
}

}  // namespace htpc
