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


#include "htpc/driver/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace htpc {

using nlohmann::json;

namespace {

const std::vector<std::string> kGrowthCommands{"grow", "resource-size", "lattice-sweep", "phase-diagram",
                                               "memory-effect"};
const std::vector<std::string> kPhaseCommands{"phase-diagram", "memory-effect"};
const std::vector<std::string> kRegionCommands{"region", "phase-diagram", "memory-effect"};

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<KeySpec> make_keys() {
    const auto all = subcommand_names();
    const auto region = kRegionCommands;
    const auto phase = kPhaseCommands;
    const auto sweep = std::vector<std::string>{"lattice-sweep"};
    const auto grow = std::vector<std::string>{"grow"};
    const double inf = 1e300;
    std::vector<KeySpec> k{
        {"out", KeyType::STRING, {}, "output CSV path", -inf, inf, all},
        {"seed", KeyType::INTEGER, {}, "master seed", 0, 1.8446744073709552e19, all},
        {"workers", KeyType::INTEGER, {}, "worker threads", 1, 4096, all},
        {"strategy", KeyType::STRING_LIST, {}, "star, cross or snowflake", -inf, inf, kGrowthCommands},
        {"p_h", KeyType::NUMBER_LIST, {"ph"}, "heralded failure probability", 0, 1, kGrowthCommands},
        {"p_G", KeyType::NUMBER_LIST, {"pG"}, "unheralded gate error probability", 0, 1, join(grow, sweep)},
        {"p_M", KeyType::NUMBER_LIST, {"pM"}, "memory error probability per time step", 0, 1, join(grow, sweep)},
        {"branching", KeyType::INTEGER_LIST, {"branchings"}, "snowflake branching", 2, 64, kGrowthCommands},
        {"depth", KeyType::INTEGER, {}, "resource depth (0: smallest that supplies attempts_N)", 0, 40,
         join(grow, sweep)},
        {"attempts_N", KeyType::INTEGER, {"N"}, "bond attempts per neighbour (0: from target)", 0, 1e7,
         join(grow, sweep)},
        {"target", KeyType::NUMBER_LIST, {"targets"}, "bond-failure target(s)", 1e-300, 1 - 1e-12, kGrowthCommands},
        {"fusion_eo", KeyType::STRING, {}, "auto, parity_projection or control_phase", -inf, inf, grow},
        {"memory", KeyType::STRING, {}, "dephasing or depolarizing", -inf, inf,
         join(join(grow, sweep), phase)},
        {"traces", KeyType::INTEGER, {}, "heralded traces per error profile", 1, 1e7,
         join(join(grow, sweep), phase)},
        {"method", KeyType::STRING, {}, "exact or sampled", -inf, inf, grow},
        {"shots", KeyType::INTEGER, {}, "forward samples per trace (sampled method)", 1, 1e9, grow},
        {"cost_samples", KeyType::INTEGER, {}, "growth runs for mean_cost", 1, 1e9, grow},
        {"L", KeyType::INTEGER_LIST, {"sizes"}, "lattice sizes", 2, 256, join(sweep, region)},
        {"p_bond", KeyType::NUMBER_LIST, {}, "missing-bond probability", 0, 1, sweep},
        {"p_loss", KeyType::NUMBER_LIST, {"loss_rows"}, "qubit loss probability (region: loss rows)", 0, 1,
         join(sweep, region)},
        {"p_err", KeyType::NUMBER_LIST, {}, "Z error probability", 0, 0.5, sweep},
        {"trials", KeyType::INTEGER, {}, "trials per point and size", 1, 1e12, join(sweep, region)},
        {"simulate_dual", KeyType::BOOL, {}, "also decode the dual sublattice", -inf, inf, sweep},
        {"factors", KeyType::NUMBER_LIST, {}, "region p_err grid factors", 1e-6, 1e6, region},
        {"prior_err_threshold", KeyType::NUMBER, {}, "region grid prior at zero loss", 1e-6, 0.5, region},
        {"prior_loss_threshold", KeyType::NUMBER, {}, "region grid prior at zero error", 1e-6, 1, region},
        {"endpoint_L", KeyType::INTEGER_LIST, {}, "sizes for the loss-only endpoint", 2, 256, region},
        {"endpoint_grid", KeyType::NUMBER_LIST, {}, "p_loss grid for the loss-only endpoint", 0, 1, region},
        {"endpoint_trials", KeyType::INTEGER, {}, "trials for the loss-only endpoint", 1, 1e12, region},
        {"max_extensions", KeyType::INTEGER, {}, "extra p_err points when a row is not bracketed", 0, 100, region},
        {"region", KeyType::STRING, {}, "precomputed region CSV (empty: compute it)", -inf, inf, phase},
        {"extra_depth", KeyType::INTEGER, {}, "depths tried beyond the minimum", 0, 10, phase},
        {"max_resource_qubits", KeyType::INTEGER, {}, "resource size cap", 1, 1e12, phase},
        {"memory_ratio", KeyType::NUMBER, {"ratio"}, "p_M / p_G", 0, 1e6, phase},
    };
    return k;
}

json default_value(const std::string &command, const std::string &key) {
    bool phase = command == "phase-diagram" || command == "memory-effect";
    if (key == "out") return command + ".csv";
    if (key == "seed") return 0;
    if (key == "workers") return 1;
    if (key == "strategy") return json::array({"snowflake"});
    if (key == "p_h") {
        if (phase) return json::array({0.5, 0.8, 0.9, 0.92, 0.94, 0.96});
        if (command == "lattice-sweep") return json::array();
        return json::array({0.9});
    }
    if (key == "p_G") return command == "lattice-sweep" ? json::array({0.0}) : json::array({1e-4});
    if (key == "p_M") return json::array({0.0});
    if (key == "branching") return json::array({2});
    if (key == "depth" || key == "attempts_N") return 0;
    if (key == "target") {
        if (phase) return json::array({0.3, 0.2, 0.1, 0.05, 0.03, 0.02, 0.01, 0.005, 0.002, 0.001, 0.0005});
        return json::array({0.01});
    }
    if (key == "fusion_eo") return "auto";
    if (key == "memory") return "dephasing";
    if (key == "traces") return phase ? 48 : 40;
    if (key == "method") return "exact";
    if (key == "shots") return 1000;
    if (key == "cost_samples") return 1000;
    if (key == "L") return command == "region" || phase ? json::array({6, 10}) : json::array({4, 6, 8});
    if (key == "p_bond") return json::array({0.0});
    if (key == "p_loss") {
        if (command == "lattice-sweep") return json::array({0.0});
        return json::array({0.0, 0.03, 0.06, 0.09, 0.12, 0.15, 0.18, 0.21});
    }
    if (key == "p_err") return json::array({0.0});
    if (key == "trials") return 1000;
    if (key == "simulate_dual") return false;
    if (key == "factors") return json::array({0.4, 0.55, 0.7, 0.85, 1.0, 1.2, 1.45, 1.75});
    if (key == "prior_err_threshold") return 0.029;
    if (key == "prior_loss_threshold") return 0.249;
    if (key == "endpoint_L") return json::array({8, 12});
    if (key == "endpoint_grid") return json::array({0.22, 0.235, 0.25, 0.265, 0.28});
    if (key == "endpoint_trials") return 2000;
    if (key == "max_extensions") return 3;
    if (key == "region") return "";
    if (key == "extra_depth") return 1;
    if (key == "max_resource_qubits") return 1 << 14;
    if (key == "memory_ratio") return command == "memory-effect" ? 0.1 : 0.0;
    throw std::logic_error("no default for key " + key);
}

bool is_list(KeyType t) {
    return t == KeyType::NUMBER_LIST || t == KeyType::INTEGER_LIST || t == KeyType::STRING_LIST;
}

json check_scalar(const KeySpec &spec, KeyType scalar, const json &v) {
    auto fail = [&](const std::string &why) { throw ConfigError("config key '" + spec.name + "': " + why); };
    switch (scalar) {
        case KeyType::STRING:
            if (!v.is_string()) fail("expected a string");
            return v;
        case KeyType::BOOL:
            if (!v.is_boolean()) fail("expected true or false");
            return v;
        case KeyType::INTEGER: {
            if (!v.is_number_integer()) fail("expected an integer");
            double d = v.is_number_unsigned() ? (double)v.get<uint64_t>() : (double)v.get<int64_t>();
            if (d < spec.lo || d > spec.hi) {
                fail("value " + v.dump() + " out of range [" + json(spec.lo).dump() + ", " + json(spec.hi).dump() +
                     "]");
            }
            return v;
        }
        default: {
            if (!v.is_number()) fail("expected a number");
            double d = v.get<double>();
            if (!std::isfinite(d) || d < spec.lo || d > spec.hi) {
                fail("value " + v.dump() + " out of range [" + json(spec.lo).dump() + ", " + json(spec.hi).dump() +
                     "]");
            }
            return json(d);
        }
    }
}

KeyType element_type(KeyType t) {
    switch (t) {
        case KeyType::NUMBER_LIST:
            return KeyType::NUMBER;
        case KeyType::INTEGER_LIST:
            return KeyType::INTEGER;
        case KeyType::STRING_LIST:
            return KeyType::STRING;
        default:
            return t;
    }
}

json check_value(const KeySpec &spec, const json &v) {
    if (!is_list(spec.type)) {
        return check_scalar(spec, spec.type, v);
    }
    json out = json::array();
    if (v.is_array()) {
        for (const auto &e : v) out.push_back(check_scalar(spec, element_type(spec.type), e));
    } else {
        out.push_back(check_scalar(spec, element_type(spec.type), v));
    }
    return out;
}

json parse_flag_scalar(const KeySpec &spec, KeyType scalar, const std::string &text) {
    auto fail = [&]() { throw ConfigError("flag --" + spec.name + ": cannot parse '" + text + "'"); };
    if (scalar == KeyType::STRING) return text;
    if (scalar == KeyType::BOOL) {
        if (text == "true" || text == "1") return true;
        if (text == "false" || text == "0") return false;
        fail();
    }
    if (text.empty()) fail();
    size_t pos = 0;
    try {
        if (scalar == KeyType::INTEGER) {
            if (text[0] == '-') {
                long long v = std::stoll(text, &pos);
                if (pos != text.size()) fail();
                return v;
            }
            unsigned long long v = std::stoull(text, &pos);
            if (pos != text.size()) fail();
            return v;
        }
        double v = std::stod(text, &pos);
        if (pos != text.size()) fail();
        return v;
    } catch (const std::logic_error &) {
        fail();
    }
    return nullptr;
}

json parse_flag(const KeySpec &spec, const std::string &text) {
    if (!is_list(spec.type)) return parse_flag_scalar(spec, spec.type, text);
    json out = json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_flag_scalar(spec, element_type(spec.type), item));
    }
    return out;
}

}  // namespace

const std::vector<std::string> &subcommand_names() {
    static const std::vector<std::string> names{"verify", "grow", "resource-size", "lattice-sweep",
                                                "region", "phase-diagram", "memory-effect"};
    return names;
}

const std::vector<KeySpec> &config_keys() {
    static const std::vector<KeySpec> keys = make_keys();
    return keys;
}

std::vector<const KeySpec *> keys_for(std::string_view command) {
    std::vector<const KeySpec *> out;
    for (const auto &k : config_keys()) {
        if (std::find(k.commands.begin(), k.commands.end(), command) != k.commands.end()) out.push_back(&k);
    }
    return out;
}

const KeySpec *find_key(std::string_view name) {
    for (const auto &k : config_keys()) {
        if (k.name == name || std::find(k.aliases.begin(), k.aliases.end(), name) != k.aliases.end()) return &k;
    }
    return nullptr;
}

RunConfig resolve_config(const std::string &command, const json &file_values,
                         const std::map<std::string, std::string> &flags, const std::string &env_workers) {
    const auto &names = subcommand_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
        throw ConfigError("unknown subcommand '" + command + "'");
    }
    if (!file_values.is_object()) {
        throw ConfigError("config file must hold a flat JSON object");
    }
    RunConfig cfg;
    cfg.command = command;
    auto keys = keys_for(command);
    auto applies = [&](const KeySpec *spec) { return std::find(keys.begin(), keys.end(), spec) != keys.end(); };
    for (const auto *k : keys) {
        cfg.values[k->name] = default_value(command, k->name);
    }
    if (!env_workers.empty()) {
        cfg.values["workers"] = check_value(*find_key("workers"), parse_flag(*find_key("workers"), env_workers));
    }
    for (const auto &[name, v] : file_values.items()) {
        const KeySpec *spec = find_key(name);
        if (!spec) throw ConfigError("config key '" + name + "': unknown key");
        json checked = check_value(*spec, v);
        if (applies(spec)) cfg.values[spec->name] = checked;
    }
    for (const auto &[name, text] : flags) {
        const KeySpec *spec = find_key(name);
        if (!spec || !applies(spec)) throw ConfigError("flag --" + name + " is not valid for " + command);
        cfg.values[spec->name] = check_value(*spec, parse_flag(*spec, text));
    }
    cfg.out = cfg.values["out"].get<std::string>();
    if (cfg.out.empty()) throw ConfigError("config key 'out': empty path");
    cfg.seed = cfg.values["seed"].get<uint64_t>();
    cfg.workers = (uint32_t)cfg.values["workers"].get<int64_t>();
    return cfg;
}

RunConfig parse_config(const std::string &command, const std::string &config_path,
                       const std::map<std::string, std::string> &flags, const std::string &env_workers) {
    json file_values = json::object();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open config file " + config_path);
        try {
            file_values = json::parse(in);
        } catch (const json::parse_error &e) {
            throw ConfigError("malformed config file " + config_path + ": " + e.what());
        }
    }
    return resolve_config(command, file_values, flags, env_workers);
}

double RunConfig::number(const std::string &key) const {
    return values.at(key).get<double>();
}
int64_t RunConfig::integer(const std::string &key) const {
    const auto &v = values.at(key);
    return v.is_number_unsigned() ? (int64_t)v.get<uint64_t>() : v.get<int64_t>();
}
std::string RunConfig::string(const std::string &key) const {
    return values.at(key).get<std::string>();
}
bool RunConfig::boolean(const std::string &key) const {
    return values.at(key).get<bool>();
}
std::vector<double> RunConfig::numbers(const std::string &key) const {
    return values.at(key).get<std::vector<double>>();
}
std::vector<int64_t> RunConfig::integers(const std::string &key) const {
    return values.at(key).get<std::vector<int64_t>>();
}
std::vector<std::string> RunConfig::strings(const std::string &key) const {
    return values.at(key).get<std::vector<std::string>>();
}
bool RunConfig::has(const std::string &key) const {
    return values.contains(key);
}

}  // namespace htpc
