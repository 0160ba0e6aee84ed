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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tqi/cli/commands.hpp"
#include "tqi/cli/config.hpp"
#include "tqi/cli/validate.hpp"
#include "tqi/errors.hpp"

namespace {

using tqi::cli::ExitCode;

struct SharedFlags {
  std::string config_path;
  std::string out_dir;
  std::optional<int> fock;
  std::string rate_convention;
  std::string sweep;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON run configuration (schema_version 1)");
  cmd->add_option("--out", f.out_dir, "output directory (overrides output.directory)");
  cmd->add_option("--fock", f.fock, "Fock cutoff N (>= 8)");
  cmd->add_option("--rate-convention", f.rate_convention, "decay rates as 'plain' or 'angular' (x 2pi)")
      ->check(CLI::IsMember({"plain", "angular"}));
  cmd->add_option("--sweep", f.sweep, "VAR:MIN:MAX:STEPS");
}

tqi::cli::RunConfig resolve(const SharedFlags& f, tqi::cli::RunConfig base) {
  tqi::cli::RunConfig cfg =
      f.config_path.empty() ? std::move(base) : tqi::cli::load_config(f.config_path, std::move(base));
  if (!f.out_dir.empty()) cfg.output.directory = f.out_dir;
  if (f.fock) {
    if (*f.fock < 8) throw tqi::ConfigError("--fock must be at least 8");
    cfg.fock_cutoff = *f.fock;
  }
  if (!f.rate_convention.empty()) tqi::cli::apply_rate_convention(cfg, f.rate_convention);
  if (!f.sweep.empty()) cfg.sweep = tqi::cli::parse_sweep(f.sweep);
  return cfg;
}

int run_validate(const std::string& out_dir, bool mutate) {
  tqi::cli::ValidationOptions opts;
  opts.mutate_propagator_sign = mutate;
  const auto groups = tqi::cli::run_validation(opts);
  const auto report = tqi::cli::validation_report(groups);
  std::cout << report.dump(2) << "\n";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(std::filesystem::path(out_dir) / "validate.json") << report.dump(2) << "\n";
  }
  return report["passed"].get<bool>() ? 0 : static_cast<int>(ExitCode::invariant);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tqi: topological qubit / charge qubit / cavity interface simulator"};
  app.require_subcommand(1);

  SharedFlags spectrum_f, phij_f, couplings_f, gate_f, fig2_f;
  auto* spectrum = app.add_subcommand("spectrum", "wire splitting E(eps) table");
  add_shared(spectrum, spectrum_f);
  auto* phij = app.add_subcommand("phij", "large-junction phase: series vs exact");
  add_shared(phij, phij_f);
  auto* coup = app.add_subcommand("couplings", "effective couplings, optima and leakage estimates");
  add_shared(coup, couplings_f);
  auto* gate = app.add_subcommand("gate", "entangling-gate fidelity curve");
  add_shared(gate, gate_f);
  auto* fig2 = app.add_subcommand("fig2", "fidelity-figure preset (k = 1, kappa = gamma = 1 MHz)");
  add_shared(fig2, fig2_f);

  std::string validate_out;
  bool mutate = false;
  auto* validate = app.add_subcommand("validate", "fast invariant checks");
  validate->add_option("--out", validate_out, "also write validate.json here");
  validate->add_flag("--mutate-propagator-sign", mutate, "test fixture: corrupt A(t)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::config);
  }

  try {
    using namespace tqi::cli;
    if (*spectrum) cmd_spectrum(resolve(spectrum_f, default_config()), std::cout);
    if (*phij) cmd_phij(resolve(phij_f, default_config()), std::cout);
    if (*coup) cmd_couplings(resolve(couplings_f, default_config()), std::cout);
    if (*gate) cmd_gate(resolve(gate_f, default_config()), std::cout);
    if (*fig2) cmd_fig2(resolve(fig2_f, fig2_config()), std::cout);
    if (*validate) return run_validate(validate_out, mutate);
  } catch (const tqi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return static_cast<int>(ExitCode::config);
  } catch (const tqi::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::numerical);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::failure);
  }
  return 0;
}
