// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0
//
// marle: relativistic BGK relaxation toolkit for polyatomic gases.
//   marle mcurves|equilibrate|relax|transport --config PATH [--out PATH]

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "cli_config.hpp"
#include "cli_runs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"relativistic BGK (Marle) relaxation toolkit"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    std::string config;
    std::string out;
    int (*run)(const marle_cli::RunConfig&, const std::string&);
  };

  Sub subs[] = {
      {app.add_subcommand("mcurves",
                          "scan the radial integrals and the gamma ratio"),
       "", "", marle_cli::run_mcurves},
      {app.add_subcommand("equilibrate",
                          "recover equilibrium parameters from a preset"),
       "", "", marle_cli::run_equilibrate},
      {app.add_subcommand("relax", "homogeneous relaxation time series"), "",
       "", marle_cli::run_relax},
      {app.add_subcommand("transport", "1-D periodic slab transport"), "", "",
       marle_cli::run_transport},
  };
  for (auto& s : subs) {
    s.cmd->add_option("--config", s.config, "run configuration file")
        ->required();
    s.cmd->add_option("--out", s.out, "output CSV (overrides [output] path)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  for (auto& s : subs) {
    if (!s.cmd->parsed()) continue;
    try {
      const marle_cli::RunConfig cfg = marle_cli::load_config_file(s.config);
      const std::string out = s.out.empty() ? cfg.out_path : s.out;
      return s.run(cfg, out);
    } catch (const marle_cli::ParseError& e) {
      std::fprintf(stderr, "config parse error: %s\n", e.what());
      return 1;
    } catch (const marle_cli::ValidationError& e) {
      std::fprintf(stderr, "validation error: %s\n", e.what());
      return 1;
    }
  }
  return 1;
}
