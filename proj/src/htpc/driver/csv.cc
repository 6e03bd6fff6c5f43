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


#include "htpc/driver/csv.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "htpc/growth/strategy.h"

namespace htpc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

class RowWriter {
   public:
    explicit RowWriter(std::string_view header) {
        out_ << header << '\n';
    }
    RowWriter &operator<<(double v) {
        return field(format_double(v));
    }
    RowWriter &operator<<(uint64_t v) {
        return field(std::to_string(v));
    }
    RowWriter &operator<<(const std::string &v) {
        return field(v);
    }
    void end() {
        out_ << '\n';
        first_ = true;
    }
    std::string str() const {
        return out_.str();
    }

   private:
    RowWriter &field(const std::string &s) {
        if (!first_) out_ << ',';
        out_ << s;
        first_ = false;
        return *this;
    }
    std::ostringstream out_;
    bool first_ = true;
};

std::vector<std::vector<std::string>> parse_table(const std::string &text, std::string_view header) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw std::runtime_error("CSV header mismatch: expected '" + std::string(header) + "', got '" + line + "'");
    }
    size_t cols = 1;
    for (char c : header) cols += c == ',';
    std::vector<std::vector<std::string>> rows;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        if (fields.size() != cols) {
            throw std::runtime_error("CSV line " + std::to_string(lineno) + ": expected " + std::to_string(cols) +
                                     " fields, got " + std::to_string(fields.size()));
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

double to_double(const std::string &s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

uint64_t to_u64(const std::string &s) {
    size_t pos = 0;
    uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::runtime_error("bad integer '" + s + "'");
    return v;
}

}  // namespace

std::string sweep_csv(const SweepResult &r) {
    RowWriter w(kSweepHeader);
    for (const auto &row : r.rows) {
        const auto &p = row.point;
        w << p.p_h << p.p_G << p.p_M << p.p_bond << p.p_loss << p.p_err << (uint64_t)row.L << row.trials
          << row.failures << row.fail_rate << row.ci_low << row.ci_high << row.seed;
        w.end();
    }
    return w.str();
}

std::string region_csv(const CorrectableRegion &r) {
    RowWriter w(kRegionHeader);
    for (const auto &pt : r.points) {
        w << pt.p_loss << (pt.flagged ? NAN : pt.p_err_max) << pt.ci << r.seed;
        w.end();
    }
    return w.str();
}

std::vector<PhaseRow> phase_rows(const PhaseDiagramResult &r) {
    std::vector<PhaseRow> rows;
    for (const auto &pt : r.points) {
        rows.push_back({std::string(strategy_name(r.strategy)), pt.p_h, pt.p_G_max, pt.attempts_N,
                        pt.resource_qubits, pt.seed});
    }
    return rows;
}

std::string phase_csv(const std::vector<PhaseRow> &rows) {
    RowWriter w(kPhaseHeader);
    for (const auto &r : rows) {
        w << r.strategy << r.p_h << r.p_G_max << r.attempts_N << r.resource_qubits << r.seed;
        w.end();
    }
    return w.str();
}

std::string grow_csv(const std::vector<GrowRow> &rows) {
    RowWriter w(kGrowHeader);
    for (const auto &r : rows) {
        w << r.strategy << r.p_h << r.p_G << r.p_M << r.mean_cost << r.cost_ci << r.p_x << r.p_z << r.p_corr_same
          << r.p_corr_cross << r.bond_missing << r.seed;
        w.end();
    }
    return w.str();
}

std::string resource_csv(const std::vector<ResourceRow> &rows) {
    RowWriter w(kResourceHeader);
    for (const auto &r : rows) {
        w << r.strategy << r.p_h << r.target << r.attempts_N << r.depth << r.leaves_per_direction << r.total_qubits
          << r.bond_missing << r.expected_cost;
        w.end();
    }
    return w.str();
}

SweepResult parse_sweep_csv(const std::string &text) {
    SweepResult r;
    for (const auto &f : parse_table(text, kSweepHeader)) {
        SweepRow row;
        row.point = {to_double(f[0]), to_double(f[1]), to_double(f[2]),
                     to_double(f[3]), to_double(f[4]), to_double(f[5])};
        row.L = (uint32_t)to_u64(f[6]);
        row.trials = to_u64(f[7]);
        row.failures = to_u64(f[8]);
        row.fail_rate = to_double(f[9]);
        row.ci_low = to_double(f[10]);
        row.ci_high = to_double(f[11]);
        row.seed = to_u64(f[12]);
        r.rows.push_back(row);
    }
    return r;
}

std::vector<RegionPoint> parse_region_csv(const std::string &text, uint64_t *seed) {
    std::vector<RegionPoint> pts;
    for (const auto &f : parse_table(text, kRegionHeader)) {
        RegionPoint p;
        p.p_loss = to_double(f[0]);
        p.p_err_max = to_double(f[1]);
        p.ci = to_double(f[2]);
        p.flagged = std::isnan(p.p_err_max) || std::isnan(p.p_loss);
        if (seed) *seed = to_u64(f[3]);
        pts.push_back(p);
    }
    return pts;
}

std::vector<PhaseRow> parse_phase_csv(const std::string &text) {
    std::vector<PhaseRow> rows;
    for (const auto &f : parse_table(text, kPhaseHeader)) {
        rows.push_back({f[0], to_double(f[1]), to_double(f[2]), to_u64(f[3]), to_u64(f[4]), to_u64(f[5])});
    }
    return rows;
}

std::vector<GrowRow> parse_grow_csv(const std::string &text) {
    std::vector<GrowRow> rows;
    for (const auto &f : parse_table(text, kGrowHeader)) {
        GrowRow r;
        r.strategy = f[0];
        double *dst[] = {&r.p_h, &r.p_G, &r.p_M, &r.mean_cost, &r.cost_ci, &r.p_x,
                         &r.p_z, &r.p_corr_same, &r.p_corr_cross, &r.bond_missing};
        for (size_t i = 0; i < 10; i++) *dst[i] = to_double(f[i + 1]);
        r.seed = to_u64(f[11]);
        rows.push_back(r);
    }
    return rows;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace htpc
