// Copyright 2026 The nlsgate Authors
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

#ifndef NLSGATE_CLI_COMMANDS_HPP
#define NLSGATE_CLI_COMMANDS_HPP

#include <ostream>
#include <string>

#include "cli/report.hpp"
#include "nlsgate/param_search.hpp"

namespace nlsgate::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,        // bad flags, unparseable angles or circuit files
    kExitUnconverged = 2,  // optimize found no zero-residual point
    kExitCheckFailed = 3,  // verify deviation or optimize certificate failed
};

struct CommandResult {
    int exit_code = kExitOk;
    Json report;
};

inline constexpr double kVerifyTolerance = 1e-9;

struct VerifyOptions {
    std::string sigma = "optimal";  // degrees or "optimal"
    std::string theta = "optimal";
};

/// Closed form and full simulation side by side. Throws std::invalid_argument
/// for unparseable angles.
CommandResult cmd_verify(const VerifyOptions &opts);

struct OptimizeOptions {
    SearchConfig config;
    /// Grid step of the global certificate in radians; 0 skips it.
    double certify_step = 0.25 * kDegree;
    bool timing = false;  // wall time breaks byte-identical output, so it is opt-in
};

CommandResult cmd_optimize(const OptimizeOptions &opts);

/// Throws CircuitParseError for malformed files.
CommandResult cmd_simulate(const std::string &path);

/// Full command-line entry point; writes the report to `out` and diagnostics
/// to `err`, returns the exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace nlsgate::cli

#endif
