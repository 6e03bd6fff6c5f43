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


#ifndef HTPC_DRIVER_COMMANDS_H
#define HTPC_DRIVER_COMMANDS_H

#include <ostream>
#include <string>

#include "json.hpp"
#include "htpc/driver/config.h"
#include "htpc/threshold/region.h"

namespace htpc {

/// Output of one subcommand before it is written to disk.
struct CommandOutput {
    std::string csv;
    /// Extra fields for the metadata sidecar.
    nlohmann::json meta = nlohmann::json::object();
    /// False when a check-style command ran to completion but reported failures.
    bool ok = true;
};

/// Runs a subcommand without touching the filesystem (except for reading a region file).
/// Progress and summaries go to `log`. Throws ConfigError for semantically invalid settings.
CommandOutput execute(const RunConfig &cfg, std::ostream &log);

/// Runs the command, writes `cfg.out` and `cfg.out + ".meta.json"`, and returns the exit code:
/// 0 success, 1 runtime failure, 2 configuration error. On failure no CSV is written and the
/// sidecar carries status "failed" with the error message.
int run_command(const RunConfig &cfg, std::ostream &log, std::ostream &err);

/// Loads a region CSV; the interpolation cell is taken from its sidecar when present.
CorrectableRegion load_region(const std::string &path);

}  // namespace htpc

#endif
