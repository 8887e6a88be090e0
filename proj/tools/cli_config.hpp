// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_CLI_CONFIG_HPP
#define MARLE_CLI_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace marle_cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full run description.  Plain `key = value` lines under `[section]`
/// headers, `#` comments; unknown keys and duplicate keys are errors.  Every
/// numeric field is validated against the library invariants before any
/// computation starts.
struct RunConfig {
  // [constants]
  double c = 1.0, m = 1.0, k_B = 1.0, tau = 1.0, sigma = 0.0;

  // [grid]
  int n_p = 32;
  double p_max = 0.0;  // 0 => cutoff rule
  int n_I = 32;
  double s_max = 0.0;  // 0 => cutoff rule
  double gamma_min = 0.5;
  double check_tol = 1e-8;

  // [scenario]
  std::string preset = "single";  // single | mixture | bump
  double n = 1.0;
  double ux = 0.0, uy = 0.0, uz = 0.0;
  double gamma = 3.0;
  double gamma_a = 2.0, gamma_b = 8.0;
  double weight_a = 0.5, weight_b = 0.5;
  double bump_amplitude = 0.1;
  double bump_p = 2.0;
  double bump_width = 0.5;
  double scan_min = 0.1;
  double scan_max = 100.0;
  int scan_points = 50;
  double tol = 1e-10;
  std::string integrator = "exact";  // exact | rk4
  bool refreeze = true;
  double dt = 0.05;
  int nsteps = 100;
  int output_every = 10;
  double t_end = 5.0;
  int nout = 20;
  int refine_levels = 0;
  int ncells = 64;
  double length = 6.4;
  double amplitude = 1e-4;

  // [output]
  std::string out_path = "out.csv";
  int precision = 17;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates; throws ParseError (with a line number) or
/// ValidationError (naming the violated invariant).
RunConfig parse_config(const std::string& text);

/// Inverse of parse_config: parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& cfg);

RunConfig load_config_file(const std::string& path);

}  // namespace marle_cli

#endif  // MARLE_CLI_CONFIG_HPP
