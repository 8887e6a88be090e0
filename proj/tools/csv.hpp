// Copyright (c) 2026 The marle authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MARLE_CLI_CSV_HPP
#define MARLE_CLI_CSV_HPP

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cli_config.hpp"

namespace marle_cli {

/// Minimal RFC-4180-style CSV writer: header row, '.' decimal separator,
/// numbers at a configurable significant-digit count (17 round-trips
/// doubles losslessly).
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> header,
            int precision = 17)
      : out_(path), ncols_(header.size()), precision_(precision) {
    if (!out_) throw ValidationError("cannot open output file: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << "\r\n";
  }

  class Row {
   public:
    explicit Row(CsvWriter& w) : w_(w) {}
    ~Row() {
      w_.out_ << "\r\n";
      w_.cols_ = 0;
    }
    Row& operator<<(double v) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.*g", w_.precision_, v);
      return raw(buf);
    }
    Row& operator<<(int v) { return raw(std::to_string(v)); }
    Row& operator<<(const std::string& v) { return raw(v); }
    /// Empty cell (e.g. a bound outside its domain).
    Row& empty() { return raw(""); }

   private:
    Row& raw(const std::string& s) {
      if (w_.cols_) w_.out_ << ',';
      w_.out_ << s;
      ++w_.cols_;
      return *this;
    }
    CsvWriter& w_;
  };

  Row row() { return Row(*this); }

 private:
  friend class Row;
  std::ofstream out_;
  std::size_t ncols_;
  std::size_t cols_ = 0;
  int precision_;
};

}  // namespace marle_cli

#endif  // MARLE_CLI_CSV_HPP
