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


#include "htpc/driver/commands.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "htpc/driver/checks.h"
#include "htpc/driver/csv.h"
#include "htpc/growth/error_profile.h"
#include "htpc/growth/grow.h"
#include "htpc/growth/strategy.h"
#include "htpc/threshold/crossing.h"
#include "htpc/threshold/phase.h"
#include "htpc/threshold/sweep.h"
#include "htpc/util/rng.h"
#include "htpc/util/stats.h"
#include "htpc/version.h"

namespace htpc {

using nlohmann::json;

namespace {

std::vector<StrategyKind> strategies(const RunConfig &cfg) {
    std::vector<StrategyKind> out;
    for (const auto &name : cfg.strings("strategy")) {
        try {
            out.push_back(strategy_from_name(name));
        } catch (const std::invalid_argument &) {
            throw ConfigError("config key 'strategy': unknown strategy '" + name + "'");
        }
    }
    if (out.empty()) throw ConfigError("config key 'strategy': empty list");
    return out;
}

std::vector<double> p_h_values(const RunConfig &cfg) {
    auto v = cfg.numbers("p_h");
    for (double p : v) {
        if (p >= 1) throw ConfigError("config key 'p_h': must be below 1 for growth, got 1");
    }
    return v;
}

template <typename F>
auto named_enum(const RunConfig &cfg, const std::string &key, F parse) {
    try {
        return parse(cfg.string(key));
    } catch (const std::invalid_argument &) {
        throw ConfigError("config key '" + key + "': unknown value '" + cfg.string(key) + "'");
    }
}

std::vector<uint32_t> to_u32(const std::vector<int64_t> &v) {
    return std::vector<uint32_t>(v.begin(), v.end());
}

GrowthStrategy sized_strategy(const RunConfig &cfg, StrategyKind kind, double p_h) {
    GrowthStrategy s;
    s.kind = kind;
    s.branching = (uint32_t)cfg.integers("branching").at(0);
    s.attempts_N = cfg.integer("attempts_N") > 0 ? (uint32_t)cfg.integer("attempts_N")
                                                   : attempts_for_target(p_h, cfg.numbers("target").at(0));
    s.depth = cfg.integer("depth") > 0 ? (uint32_t)cfg.integer("depth")
                                       : min_depth_for_attempts(kind, s.attempts_N, s.branching);
    try {
        s.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("growth strategy: ") + e.what());
    }
    return s;
}

CommandOutput cmd_verify(const RunConfig &cfg, std::ostream &log) {
    std::vector<CheckResult> checks = check_pauli_algebra(cfg.seed);
    checks.push_back(check_all_missing_bonds({2, 3}));
    checks.push_back(check_matching_exactness(1000, 8, cfg.seed));
    CommandOutput out;
    std::string csv = "check,result,detail\n";
    for (const auto &c : checks) {
        log << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        std::string name = c.name, detail = c.detail;
        for (auto *s : {&name, &detail}) {
            for (char &ch : *s) {
                if (ch == ',') ch = ';';
            }
        }
        csv += name + "," + (c.passed ? "PASS" : "FAIL") + "," + detail + "\n";
        out.ok = out.ok && c.passed;
    }
    out.csv = csv;
    return out;
}

CommandOutput cmd_grow(const RunConfig &cfg, std::ostream &log) {
    auto kinds = strategies(cfg);
    auto p_hs = p_h_values(cfg);
    auto memory = named_enum(cfg, "memory", memory_model_from_name);
    auto eo_kind = named_enum(cfg, "fusion_eo", eo_kind_from_name);
    auto method = named_enum(cfg, "method", profile_method_from_name);
    std::vector<GrowRow> rows;
    json details = json::array();
    for (size_t si = 0; si < kinds.size(); si++) {
        for (size_t hi = 0; hi < p_hs.size(); hi++) {
            GrowthStrategy s = sized_strategy(cfg, kinds[si], p_hs[hi]);
            s.fusion_eo = eo_kind;
            uint64_t row_seed = derive_seed(cfg.seed, {si, hi});
            std::mt19937_64 rng(derive_seed(row_seed, {0}));
            RunningStats cost;
            for (int64_t k = 0; k < cfg.integer("cost_samples"); k++) {
                cost.add((double)sample_growth_cost(s, p_hs[hi], rng).raw_qubits);
            }
            size_t gi = 0;
            for (double p_G : cfg.numbers("p_G")) {
                for (double p_M : cfg.numbers("p_M")) {
                    EOModel eo{p_hs[hi], p_G, p_M, memory};
                    auto prof = estimate_error_profile(s, eo, (uint32_t)cfg.integer("traces"),
                                                       derive_seed(row_seed, {1, gi++}), method,
                                                       (uint32_t)cfg.integer("shots"));
                    GrowRow r{std::string(strategy_name(s.kind)), p_hs[hi], p_G, p_M, cost.mean,
                              1.96 * cost.stderr_of_mean(), prof.p_x, prof.p_z, prof.p_corr_same,
                              prof.p_corr_cross, prof.bond_missing, row_seed};
                    rows.push_back(r);
                    details.push_back({{"strategy", r.strategy}, {"p_h", r.p_h}, {"p_G", p_G}, {"p_M", p_M},
                                       {"attempts_N", s.attempts_N}, {"depth", s.depth},
                                       {"branching", s.branching}, {"resource_qubits", resource_size(s)},
                                       {"expected_cost", expected_cost(s, p_hs[hi])},
                                       {"p_z_ci", {prof.p_z_ci_low, prof.p_z_ci_high}}});
                    log << r.strategy << " p_h=" << r.p_h << " p_G=" << p_G << " p_M=" << p_M << " N=" << s.attempts_N
                        << " qubits=" << resource_size(s) << " mean_cost=" << r.mean_cost << " p_z=" << r.p_z
                        << " p_corr_same=" << r.p_corr_same << "\n";
                }
            }
        }
    }
    CommandOutput out;
    out.csv = grow_csv(rows);
    out.meta["rows"] = details;
    return out;
}

CommandOutput cmd_resource_size(const RunConfig &cfg, std::ostream &log) {
    std::vector<ResourceRow> rows;
    uint32_t b = (uint32_t)cfg.integers("branching").at(0);
    for (auto kind : strategies(cfg)) {
        for (double p_h : p_h_values(cfg)) {
            for (double target : cfg.numbers("target")) {
                auto req = required_resource_size(kind, p_h, target, b);
                GrowthStrategy s;
                s.kind = kind;
                s.branching = kind == StrategyKind::SNOWFLAKE ? b : 2;
                s.depth = req.depth;
                s.attempts_N = req.attempts_N;
                ResourceRow r{std::string(strategy_name(kind)), p_h, target, req.attempts_N, req.depth,
                              req.leaves_per_direction, req.total_qubits, req.bond_missing_prob,
                              expected_cost(s, p_h)};
                log << r.strategy << " p_h=" << p_h << " target=" << target << " N=" << r.attempts_N
                    << " depth=" << r.depth << " total_qubits=" << r.total_qubits << "\n";
                rows.push_back(r);
            }
        }
    }
    return {resource_csv(rows), json::object(), true};
}

CommandOutput cmd_lattice_sweep(const RunConfig &cfg, std::ostream &log) {
    SweepConfig sc;
    sc.sizes = to_u32(cfg.integers("L"));
    sc.trials = (uint64_t)cfg.integer("trials");
    sc.seed = cfg.seed;
    sc.workers = cfg.workers;
    sc.simulate_dual = cfg.boolean("simulate_dual");
    auto p_hs = cfg.numbers("p_h");
    if (p_hs.empty()) {
        for (double pb : cfg.numbers("p_bond")) {
            for (double pl : cfg.numbers("p_loss")) {
                for (double pe : cfg.numbers("p_err")) {
                    SweepPoint p;
                    p.p_bond = pb;
                    p.p_loss = pl;
                    p.p_err = pe;
                    sc.points.push_back(p);
                }
            }
        }
    } else {
        StrategyKind kind = strategies(cfg).at(0);
        auto memory = named_enum(cfg, "memory", memory_model_from_name);
        for (size_t hi = 0; hi < p_hs.size(); hi++) {
            if (p_hs[hi] >= 1) throw ConfigError("config key 'p_h': must be below 1 for growth, got 1");
            GrowthStrategy s = sized_strategy(cfg, kind, p_hs[hi]);
            auto model = build_profile_model(s, p_hs[hi], memory, (uint32_t)cfg.integer("traces"),
                                             derive_seed(cfg.seed, {~0ull, hi}));
            for (double pG : cfg.numbers("p_G")) {
                for (double pM : cfg.numbers("p_M")) {
                    for (double pl : cfg.numbers("p_loss")) {
                        SweepPoint p;
                        p.p_h = p_hs[hi];
                        p.p_G = pG;
                        p.p_M = pM;
                        p.p_bond = std::pow(p_hs[hi], s.attempts_N);
                        p.p_loss = pl;
                        p.p_err = std::min(0.5, model.p_z(pG, pM));
                        sc.points.push_back(p);
                    }
                }
            }
        }
    }
    auto result = run_sweep(sc);
    for (const auto &row : result.rows) {
        log << "L=" << row.L << " p_bond=" << row.point.p_bond << " p_loss=" << row.point.p_loss
            << " p_err=" << row.point.p_err << " fail_rate=" << row.fail_rate << "\n";
    }
    CommandOutput out;
    out.csv = sweep_csv(result);
    for (auto axis : {SweepAxis::P_LOSS, SweepAxis::P_ERR, SweepAxis::P_BOND}) {
        try {
            auto est = estimate_crossing(curves_from_sweep(result, axis));
            const char *name = axis == SweepAxis::P_LOSS ? "p_loss" : axis == SweepAxis::P_ERR ? "p_err" : "p_bond";
            json pairs = json::array();
            for (const auto &pc : est.pairs) {
                pairs.push_back({{"L_small", pc.L_small}, {"L_large", pc.L_large}, {"crossing", pc.crossing},
                                 {"ci", {pc.ci_low, pc.ci_high}}});
            }
            out.meta["crossing"] = {{"axis", name}, {"threshold", est.threshold}, {"uncertainty", est.uncertainty},
                                    {"pairs_consistent", est.pairs_consistent()}, {"pairs", pairs}};
            log << "crossing along " << name << ": " << est.threshold << " +/- " << est.uncertainty << "\n";
            break;
        } catch (const std::exception &) {
        }
    }
    return out;
}

RegionConfig region_config(const RunConfig &cfg) {
    RegionConfig rc;
    rc.sizes = to_u32(cfg.integers("L"));
    rc.loss_rows = cfg.numbers("p_loss");
    rc.factors = cfg.numbers("factors");
    rc.prior_err_threshold = cfg.number("prior_err_threshold");
    rc.prior_loss_threshold = cfg.number("prior_loss_threshold");
    rc.endpoint_sizes = to_u32(cfg.integers("endpoint_L"));
    rc.endpoint_grid = cfg.numbers("endpoint_grid");
    rc.trials = (uint64_t)cfg.integer("trials");
    rc.endpoint_trials = (uint64_t)cfg.integer("endpoint_trials");
    rc.max_extensions = (uint32_t)cfg.integer("max_extensions");
    rc.seed = cfg.seed;
    rc.workers = cfg.workers;
    try {
        rc.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("region settings: ") + e.what());
    }
    return rc;
}

json region_meta(const CorrectableRegion &r) {
    json pts = json::array();
    for (const auto &p : r.points) {
        pts.push_back({{"p_loss", p.p_loss}, {"p_err_max", p.flagged ? json(nullptr) : json(p.p_err_max)},
                       {"ci", p.ci}, {"flagged", p.flagged}});
    }
    return {{"loss_cell", r.loss_cell}, {"err_rel_cell", r.err_rel_cell}, {"points", pts}};
}

CommandOutput cmd_region(const RunConfig &cfg, std::ostream &log) {
    auto region = correctable_region(region_config(cfg));
    for (const auto &p : region.points) {
        log << "p_loss=" << p.p_loss << " p_err_max=" << p.p_err_max << (p.flagged ? " (flagged)" : "") << "\n";
    }
    CommandOutput out;
    out.csv = region_csv(region);
    out.meta["region"] = region_meta(region);
    return out;
}

CommandOutput cmd_phase(const RunConfig &cfg, std::ostream &log) {
    CorrectableRegion region;
    std::string path = cfg.string("region");
    if (path.empty()) {
        log << "computing correctable region\n";
        region = correctable_region(region_config(cfg));
    } else {
        region = load_region(path);
    }
    auto memory = named_enum(cfg, "memory", memory_model_from_name);
    std::vector<PhaseRow> rows;
    json details = json::array();
    for (auto kind : strategies(cfg)) {
        PhaseConfig pc;
        pc.strategy = kind;
        pc.p_h_grid = p_h_values(cfg);
        pc.bond_fail_targets = cfg.numbers("target");
        pc.branchings = to_u32(cfg.integers("branching"));
        pc.extra_depth = (uint32_t)cfg.integer("extra_depth");
        pc.max_resource_qubits = (uint64_t)cfg.integer("max_resource_qubits");
        pc.traces = (uint32_t)cfg.integer("traces");
        pc.memory = memory;
        pc.seed = cfg.seed;
        pc.workers = cfg.workers;
        try {
            pc.validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("phase settings: ") + e.what());
        }
        auto result = memory_effect(pc, region, cfg.number("memory_ratio"));
        for (const auto &pt : result.points) {
            log << strategy_name(kind) << " p_h=" << pt.p_h << " p_G_max=" << pt.p_G_max << " N=" << pt.attempts_N
                << " qubits=" << pt.resource_qubits << (pt.diagnostics.empty() ? "" : " [" + pt.diagnostics + "]")
                << "\n";
            details.push_back({{"strategy", strategy_name(kind)}, {"p_h", pt.p_h}, {"p_G_max", pt.p_G_max},
                               {"feasible", pt.feasible}, {"attempts_N", pt.attempts_N}, {"depth", pt.depth},
                               {"branching", pt.branching}, {"resource_qubits", pt.resource_qubits},
                               {"p_loss", pt.p_loss}, {"p_err", pt.p_err}, {"diagnostics", pt.diagnostics}});
        }
        auto r = phase_rows(result);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    CommandOutput out;
    out.csv = phase_csv(rows);
    out.meta["points"] = details;
    out.meta["region"] = region_meta(region);
    return out;
}

}  // namespace

CorrectableRegion load_region(const std::string &path) {
    auto points = parse_region_csv(read_file(path));
    double loss_cell = 0.03, err_rel_cell = 0.2;
    std::string meta_path = path + ".meta.json";
    if (std::filesystem::exists(meta_path)) {
        auto meta = json::parse(read_file(meta_path));
        if (meta.contains("region")) {
            loss_cell = meta["region"].value("loss_cell", loss_cell);
            err_rel_cell = meta["region"].value("err_rel_cell", err_rel_cell);
        }
    }
    return region_from_points(std::move(points), loss_cell, err_rel_cell);
}

CommandOutput execute(const RunConfig &cfg, std::ostream &log) {
    if (cfg.command == "verify") return cmd_verify(cfg, log);
    if (cfg.command == "grow") return cmd_grow(cfg, log);
    if (cfg.command == "resource-size") return cmd_resource_size(cfg, log);
    if (cfg.command == "lattice-sweep") return cmd_lattice_sweep(cfg, log);
    if (cfg.command == "region") return cmd_region(cfg, log);
    if (cfg.command == "phase-diagram" || cfg.command == "memory-effect") return cmd_phase(cfg, log);
    throw ConfigError("unknown subcommand '" + cfg.command + "'");
}

int run_command(const RunConfig &cfg, std::ostream &log, std::ostream &err) {
    auto start = std::chrono::steady_clock::now();
    json meta = {{"command", cfg.command}, {"config", cfg.values}, {"seed", cfg.seed},
                 {"version", std::string(kVersion)}};
    auto finish = [&](const std::string &status) {
        meta["status"] = status;
        meta["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_file(cfg.out + ".meta.json", meta.dump(2) + "\n");
    };
    int code = 0;
    try {
        CommandOutput out = execute(cfg, log);
        for (auto &[k, v] : out.meta.items()) meta[k] = v;
        write_file(cfg.out, out.csv);
        code = out.ok ? 0 : 1;
        finish(out.ok ? "complete" : "checks_failed");
    } catch (const ConfigError &e) {
        err << "configuration error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        code = 1;
    }
    if (code == 1 || code == 2) {
        std::error_code ec;
        std::filesystem::remove(cfg.out, ec);
        try {
            meta["error"] = code == 2 ? "configuration error" : "runtime failure";
            if (!meta.contains("status")) finish("failed");
        } catch (const std::exception &e) {
            err << "error: cannot write metadata: " << e.what() << "\n";
        }
    }
    return code;
}

}  // namespace htpc
