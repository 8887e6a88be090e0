// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0
//
// Config parsing unit tests plus end-to-end runs of the installed binary
// (path passed as argv[1] by ctest).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_config.hpp"

namespace {

std::string g_cli_path;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

int run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

using namespace marle_cli;

TEST_CASE("minimal config parses with the nondimensional preset") {
  const RunConfig cfg = parse_config("");
  CHECK(cfg.c == 1.0);
  CHECK(cfg.m == 1.0);
  CHECK(cfg.k_B == 1.0);
  CHECK(cfg.tau == 1.0);
  CHECK(cfg.sigma == 0.0);
}

TEST_CASE("sections, comments, values") {
  const RunConfig cfg = parse_config(
      "# a comment\n"
      "[constants]\n"
      "sigma = 0.5   # trailing comment\n"
      "[grid]\n"
      "n_p = 16\n"
      "[scenario]\n"
      "preset = mixture\n"
      "gamma_a = 2\n"
      "gamma_b = 8\n");
  CHECK(cfg.sigma == 0.5);
  CHECK(cfg.n_p == 16);
  CHECK(cfg.preset == "mixture");
}

TEST_CASE("validation errors name the violated invariant") {
  CHECK_THROWS_WITH_AS(parse_config("[constants]\nsigma = -1.5\n"),
                       "sigma must exceed -1", ValidationError);
  CHECK_THROWS_AS(parse_config("[grid]\nn_p = 15\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[constants]\nc = -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[scenario]\npreset = banana\n"),
                  ValidationError);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_config("[constants]\nc = 1\nc = 2\n"),
                       "line 3: duplicate key 'constants.c'", ParseError);
  CHECK_THROWS_AS(parse_config("[constants]\nwhat = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config("[nosuch]\n"), ParseError);
  CHECK_THROWS_AS(parse_config("c = 1\n"), ParseError);  // outside a section
  CHECK_THROWS_AS(parse_config("[constants]\nc 1\n"), ParseError);
  CHECK_THROWS_AS(parse_config("[constants]\nc = banana\n"), ParseError);
}

TEST_CASE("render/parse round trip") {
  RunConfig cfg;
  cfg.sigma = 0.57;
  cfg.n_p = 24;
  cfg.p_max = 13.25;
  cfg.preset = "bump";
  cfg.bump_amplitude = 0.123456789012345;
  cfg.refreeze = false;
  cfg.out_path = "series.csv";
  const RunConfig back = parse_config(render_config(cfg));
  CHECK(back == cfg);
}

TEST_CASE("cli end to end" * doctest::skip(false)) {
  REQUIRE(!g_cli_path.empty());
  const std::string dir = "cli_tmp";
  (void)std::system(("mkdir -p " + dir).c_str());

  SUBCASE("mcurves emits a monotone scan") {
    write_file(dir + "/m.cfg",
               "[scenario]\nscan_min = 0.5\nscan_max = 20\nscan_points = 8\n"
               "tol = 1e-9\n[output]\npath = " + dir + "/m.csv\n");
    CHECK(run_cli("mcurves --config " + dir + "/m.cfg") == 0);
    const auto rows = read_csv(dir + "/m.csv");
    REQUIRE(rows.size() == 9);  // header + 8
    CHECK(rows[0][0] == "gamma");
    CHECK(rows[0][6] == "monotone_ok");
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double r = std::stod(rows[i][3]);
      CHECK(r > prev);
      prev = r;
      CHECK(rows[i][6] == "1");
    }
    // lower bound column empty where gamma <= 2 sigma + 5 = 5
    CHECK(rows[1][5].empty());
    CHECK(!rows[8][5].empty());
  }

  SUBCASE("equilibrate recovers a single juttner") {
    write_file(dir + "/e.cfg",
               "[grid]\nn_p = 16\nn_I = 24\ngamma_min = 3\ncheck_tol = 1e-4\n"
               "[scenario]\npreset = single\ngamma = 3\n"
               "[output]\npath = " + dir + "/e.csv\n");
    CHECK(run_cli("equilibrate --config " + dir + "/e.cfg") == 0);
    const auto rows = read_csv(dir + "/e.csv");
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][7]) == doctest::Approx(3.0).epsilon(2e-2));
  }

  SUBCASE("relax emits a nondecreasing h0 column and conserved N") {
    write_file(dir + "/r.cfg",
               "[grid]\nn_p = 16\nn_I = 24\ngamma_min = 2\ncheck_tol = 1e-4\n"
               "[scenario]\npreset = mixture\ngamma_a = 2\ngamma_b = 6\n"
               "integrator = exact\nt_end = 2.0\nnout = 6\n"
               "[output]\npath = " + dir + "/r.csv\n");
    CHECK(run_cli("relax --config " + dir + "/r.cfg") == 0);
    const auto rows = read_csv(dir + "/r.csv");
    REQUIRE(rows.size() == 8);
    const double n0 = std::stod(rows[1][1]);
    double prev_h = -1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(std::stod(rows[i][1]) == doctest::Approx(n0).epsilon(1e-3));
      const double h = std::stod(rows[i][10]);
      CHECK(h >= prev_h - 1e-9);
      prev_h = h;
    }
  }

  SUBCASE("transport keeps uniform cells uniform") {
    write_file(dir + "/t.cfg",
               "[grid]\nn_p = 12\nn_I = 12\np_max = 8\ngamma_min = 3\n"
               "check_tol = 1e-2\n"
               "[scenario]\npreset = single\ngamma = 3\namplitude = 0\n"
               "ncells = 8\nlength = 1.6\ndt = 0.1\nnsteps = 5\n"
               "output_every = 5\n[output]\npath = " + dir + "/t.csv\n");
    CHECK(run_cli("transport --config " + dir + "/t.cfg") == 0);
    const auto rows = read_csv(dir + "/t.csv");
    REQUIRE(rows.size() >= 2);
    const double n0 = std::stod(rows[1][1]);
    const double n1 = std::stod(rows.back()[1]);
    CHECK(n1 == doctest::Approx(n0).epsilon(1e-9));
  }

  SUBCASE("exit codes: validation vs numeric") {
    write_file(dir + "/bad.cfg", "[constants]\nsigma = -1.5\n");
    CHECK(run_cli("mcurves --config " + dir + "/bad.cfg") == 1);
    CHECK(run_cli("mcurves --config " + dir + "/does_not_exist.cfg") == 1);
    CHECK(run_cli("mcurves") == 1);  // missing --config

    // zero-amplitude mixture with absurd cutoff: the grid cannot be built
    write_file(dir + "/num.cfg",
               "[grid]\nn_p = 8\nn_I = 4\ncheck_tol = 1e-30\n"
               "[output]\npath = " + dir + "/num.csv\n");
    CHECK(run_cli("equilibrate --config " + dir + "/num.cfg") == 1);
  }

  SUBCASE("deterministic outputs: identical bytes on identical config") {
    write_file(dir + "/d.cfg",
               "[scenario]\nscan_min = 1\nscan_max = 5\nscan_points = 4\n"
               "[output]\npath = " + dir + "/d1.csv\n");
    CHECK(run_cli("mcurves --config " + dir + "/d.cfg") == 0);
    CHECK(run_cli("mcurves --config " + dir + "/d.cfg --out " + dir +
                  "/d2.csv") == 0);
    CHECK(slurp(dir + "/d1.csv") == slurp(dir + "/d2.csv"));
  }
}

int main(int argc, char** argv) {
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli_path = argv[argc - 1];
    --argc;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
