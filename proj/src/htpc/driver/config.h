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


#ifndef HTPC_DRIVER_CONFIG_H
#define HTPC_DRIVER_CONFIG_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace htpc {

/// Invalid configuration; the CLI exits with code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class KeyType { NUMBER, INTEGER, STRING, BOOL, NUMBER_LIST, INTEGER_LIST, STRING_LIST };

struct KeySpec {
    std::string name;
    KeyType type;
    std::vector<std::string> aliases;
    std::string help;
    /// Inclusive bounds for numbers and integers (applied to every list element).
    double lo = -1e300;
    double hi = 1e300;
    /// Subcommands that read this key.
    std::vector<std::string> commands;
};

const std::vector<std::string> &subcommand_names();
const std::vector<KeySpec> &config_keys();
/// Keys read by one subcommand (the shared keys out/seed/workers included).
std::vector<const KeySpec *> keys_for(std::string_view command);
const KeySpec *find_key(std::string_view name_or_alias);

struct RunConfig {
    std::string command;
    /// Resolved values for every key the command reads (defaults filled in).
    nlohmann::json values = nlohmann::json::object();
    std::string out;
    uint64_t seed = 0;
    uint32_t workers = 1;

    double number(const std::string &key) const;
    int64_t integer(const std::string &key) const;
    std::string string(const std::string &key) const;
    bool boolean(const std::string &key) const;
    std::vector<double> numbers(const std::string &key) const;
    std::vector<int64_t> integers(const std::string &key) const;
    std::vector<std::string> strings(const std::string &key) const;
    bool has(const std::string &key) const;
};

/// Resolves a configuration: defaults, then the JSON file (flat object, keys as in config_keys()),
/// then flag values given as text. Throws ConfigError naming the offending key.
/// `env_workers` is the HERALD_TPC_WORKERS fallback (empty if unset).
RunConfig parse_config(const std::string &command, const std::string &config_path,
                       const std::map<std::string, std::string> &flags, const std::string &env_workers = "");

/// Same, with the file contents already parsed.
RunConfig resolve_config(const std::string &command, const nlohmann::json &file_values,
                         const std::map<std::string, std::string> &flags, const std::string &env_workers = "");

}  // namespace htpc

#endif
