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


#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "htpc/driver/commands.h"
#include "htpc/driver/config.h"
#include "htpc/version.h"

int main(int argc, char **argv) {
    CLI::App app{"herald-tpc: fault-tolerance thresholds for heralded-failure entangling operations"};
    app.set_version_flag("--version", std::string(htpc::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::map<std::string, std::string>> flags;
    std::map<std::string, CLI::App *> subs;
    const std::map<std::string, std::string> descriptions{
        {"verify", "run Pauli-algebra, supercheck and matching self-checks"},
        {"grow", "resource growth cost and node error profile"},
        {"resource-size", "attempts and resource size for a bond-failure target"},
        {"lattice-sweep", "Monte Carlo logical failure rates on the lossy lattice"},
        {"region", "correctable region in (p_loss, p_err)"},
        {"phase-diagram", "maximal tolerable p_G per p_h"},
        {"memory-effect", "phase diagram with p_M = memory_ratio * p_G"},
    };
    for (const auto &cmd : htpc::subcommand_names()) {
        auto *sub = app.add_subcommand(cmd, descriptions.at(cmd));
        subs[cmd] = sub;
        sub->add_option("--config", config_path, "flat JSON config file")->check(CLI::ExistingFile);
        for (const auto *key : htpc::keys_for(cmd)) {
            std::string names = "--" + key->name;
            for (const auto &a : key->aliases) names += ",--" + a;
            std::string name = key->name;
            auto *opt = sub->add_option_function<std::string>(
                names, [&flags, cmd, name](const std::string &v) { flags[cmd][name] = v; }, key->help);
            opt->type_name("VALUE");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    for (const auto &[name, sub] : subs) {
        if (sub->parsed()) command = name;
    }
    const char *env = std::getenv("HERALD_TPC_WORKERS");
    htpc::RunConfig cfg;
    try {
        cfg = htpc::parse_config(command, config_path, flags[command], env ? env : "");
    } catch (const htpc::ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    return htpc::run_command(cfg, std::cout, std::cerr);
}
