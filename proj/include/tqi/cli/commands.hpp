// Copyright 2026 The tqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqi/cli/config.hpp"

namespace tqi::cli {

/// Process exit status of the tqi tool.
enum class ExitCode : int {
  ok = 0,
  failure = 1,     // anything unexpected
  config = 2,      // bad flags, config document or parameter values
  numerical = 3,   // an integrator, root finder or cutoff check did not converge
  invariant = 4,   // validate found a failing invariant group
};

/// Each command writes its files into cfg.output.directory (created if
/// needed) and a short human-readable summary to `log`. Errors are thrown
/// (ConfigError, ConvergenceError, ...) and mapped to exit codes by main.
void cmd_spectrum(const RunConfig& cfg, std::ostream& log);
void cmd_phij(const RunConfig& cfg, std::ostream& log);
void cmd_couplings(const RunConfig& cfg, std::ostream& log);
void cmd_gate(const RunConfig& cfg, std::ostream& log);
void cmd_fig2(const RunConfig& cfg, std::ostream& log);

/// Number formatting shared by every CSV column (%.12g).
std::string num(double v);

/// Header line then one line per row.
std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

/// Evaluates f(x) for every x on at most `workers` threads; results keep
/// the order of xs.
std::vector<std::vector<std::string>> parallel_rows(
    const std::vector<double>& xs, const std::function<std::vector<std::string>(double)>& f,
    unsigned workers = 0);

}  // namespace tqi::cli
