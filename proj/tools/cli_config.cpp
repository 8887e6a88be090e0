// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace marle_cli {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct Field {
  enum Kind { kDouble, kInt, kBool, kString } kind;
  std::function<void(RunConfig&, const std::string&, int line)> set;
  std::function<std::string(const RunConfig&)> get;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ParseError("line " + std::to_string(line) + ": expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ParseError("line " + std::to_string(line) + ": expected a boolean, got '" + v + "'");
}

#define F_DOUBLE(member)                                                   \
  Field{Field::kDouble,                                                   \
        [](RunConfig& c, const std::string& v, int line) {                \
          c.member = parse_double(v, line);                               \
        },                                                                \
        [](const RunConfig& c) { return fmt_double(c.member); }}
#define F_INT(member)                                                     \
  Field{Field::kInt,                                                      \
        [](RunConfig& c, const std::string& v, int line) {                \
          c.member = parse_int(v, line);                                  \
        },                                                                \
        [](const RunConfig& c) { return std::to_string(c.member); }}
#define F_BOOL(member)                                                    \
  Field{Field::kBool,                                                     \
        [](RunConfig& c, const std::string& v, int line) {                \
          c.member = parse_bool(v, line);                                 \
        },                                                                \
        [](const RunConfig& c) {                                          \
          return std::string(c.member ? "true" : "false");                \
        }}
#define F_STRING(member)                                                  \
  Field{Field::kString,                                                   \
        [](RunConfig& c, const std::string& v, int line) {                \
          (void)line;                                                     \
          c.member = v;                                                   \
        },                                                                \
        [](const RunConfig& c) { return c.member; }}

using Schema = std::vector<std::pair<std::string, std::map<std::string, Field>>>;

const Schema& schema() {
  static const Schema s = {
      {"constants",
       {{"c", F_DOUBLE(c)},
        {"m", F_DOUBLE(m)},
        {"k_B", F_DOUBLE(k_B)},
        {"tau", F_DOUBLE(tau)},
        {"sigma", F_DOUBLE(sigma)}}},
      {"grid",
       {{"n_p", F_INT(n_p)},
        {"p_max", F_DOUBLE(p_max)},
        {"n_I", F_INT(n_I)},
        {"s_max", F_DOUBLE(s_max)},
        {"gamma_min", F_DOUBLE(gamma_min)},
        {"check_tol", F_DOUBLE(check_tol)}}},
      {"scenario",
       {{"preset", F_STRING(preset)},
        {"n", F_DOUBLE(n)},
        {"ux", F_DOUBLE(ux)},
        {"uy", F_DOUBLE(uy)},
        {"uz", F_DOUBLE(uz)},
        {"gamma", F_DOUBLE(gamma)},
        {"gamma_a", F_DOUBLE(gamma_a)},
        {"gamma_b", F_DOUBLE(gamma_b)},
        {"weight_a", F_DOUBLE(weight_a)},
        {"weight_b", F_DOUBLE(weight_b)},
        {"bump_amplitude", F_DOUBLE(bump_amplitude)},
        {"bump_p", F_DOUBLE(bump_p)},
        {"bump_width", F_DOUBLE(bump_width)},
        {"scan_min", F_DOUBLE(scan_min)},
        {"scan_max", F_DOUBLE(scan_max)},
        {"scan_points", F_INT(scan_points)},
        {"tol", F_DOUBLE(tol)},
        {"integrator", F_STRING(integrator)},
        {"refreeze", F_BOOL(refreeze)},
        {"dt", F_DOUBLE(dt)},
        {"nsteps", F_INT(nsteps)},
        {"output_every", F_INT(output_every)},
        {"t_end", F_DOUBLE(t_end)},
        {"nout", F_INT(nout)},
        {"refine_levels", F_INT(refine_levels)},
        {"ncells", F_INT(ncells)},
        {"length", F_DOUBLE(length)},
        {"amplitude", F_DOUBLE(amplitude)}}},
      {"output",
       {{"path", F_STRING(out_path)}, {"precision", F_INT(precision)}}},
  };
  return s;
}

void validate(const RunConfig& c) {
  auto req = [](bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
  };
  req(c.c > 0, "c must be positive");
  req(c.m > 0, "m must be positive");
  req(c.k_B > 0, "k_B must be positive");
  req(c.tau > 0, "tau must be positive");
  req(c.sigma > -1.0, "sigma must exceed -1");
  req(c.n_p >= 8 && c.n_p % 2 == 0, "n_p must be even and >= 8");
  req(c.n_I >= 4, "n_I must be >= 4");
  req(c.gamma_min > 0, "gamma_min must be positive");
  req(c.check_tol > 0, "check_tol must be positive");
  req(c.preset == "single" || c.preset == "mixture" || c.preset == "bump",
      "preset must be one of single|mixture|bump");
  req(c.n > 0, "n must be positive");
  req(c.gamma > 0, "gamma must be positive");
  req(c.gamma_a > 0 && c.gamma_b > 0, "mixture gammas must be positive");
  req(c.weight_a >= 0 && c.weight_b >= 0 && c.weight_a + c.weight_b > 0,
      "mixture weights must be nonnegative and not both zero");
  req(c.bump_width > 0, "bump_width must be positive");
  req(c.scan_min > 0 && c.scan_max > c.scan_min,
      "scan range must satisfy 0 < scan_min < scan_max");
  req(c.scan_points >= 2, "scan_points must be >= 2");
  req(c.tol > 0, "tol must be positive");
  req(c.integrator == "exact" || c.integrator == "rk4",
      "integrator must be exact|rk4");
  req(c.dt > 0, "dt must be positive");
  req(c.nsteps >= 0, "nsteps must be >= 0");
  req(c.output_every > 0, "output_every must be positive");
  req(c.t_end > 0, "t_end must be positive");
  req(c.nout >= 1, "nout must be >= 1");
  req(c.refine_levels >= 0, "refine_levels must be >= 0");
  req(c.ncells >= 2, "ncells must be >= 2");
  req(c.length > 0, "length must be positive");
  req(c.precision >= 1 && c.precision <= 17, "precision must be in [1, 17]");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ParseError("line " + std::to_string(line) + ": malformed section header");
      section = trim(s.substr(1, s.size() - 2));
      bool known = false;
      for (const auto& [name, fields] : schema())
        if (name == section) known = true;
      if (!known)
        throw ParseError("line " + std::to_string(line) + ": unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty())
      throw ParseError("line " + std::to_string(line) + ": empty key");
    if (section.empty())
      throw ParseError("line " + std::to_string(line) + ": key outside any [section]");

    const Field* field = nullptr;
    for (const auto& [name, fields] : schema())
      if (name == section) {
        auto it = fields.find(key);
        if (it != fields.end()) field = &it->second;
      }
    if (!field)
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "' in [" + section + "]");
    const std::string qual = section + "." + key;
    if (!seen.insert(qual).second)
      throw ParseError("line " + std::to_string(line) + ": duplicate key '" + qual + "'");
    field->set(cfg, value, line);
  }
  validate(cfg);
  return cfg;
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream out;
  for (const auto& [name, fields] : schema()) {
    out << "[" << name << "]\n";
    for (const auto& [key, field] : fields)
      out << key << " = " << field.get(cfg) << "\n";
    out << "\n";
  }
  return out.str();
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace marle_cli
