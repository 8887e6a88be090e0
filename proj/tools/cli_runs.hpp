// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_CLI_RUNS_HPP
#define MARLE_CLI_RUNS_HPP

#include <string>

#include "cli_config.hpp"

namespace marle_cli {

/// Exit codes for the four run drivers: 0 success, 1 validation failure,
/// 2 numeric failure (non-timelike flux, ratio out of range, ...).
int run_mcurves(const RunConfig& cfg, const std::string& out_path);
int run_equilibrate(const RunConfig& cfg, const std::string& out_path);
int run_relax(const RunConfig& cfg, const std::string& out_path);
int run_transport(const RunConfig& cfg, const std::string& out_path);

}  // namespace marle_cli

#endif  // MARLE_CLI_RUNS_HPP
