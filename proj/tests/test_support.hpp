#pragma once

// Shared helpers for the test binaries: data-file lookup and a tiny CSV reader.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghcode/code.hpp"
#include "ghcode/gray.hpp"

#ifndef GHCODE_TEST_DATA_DIR
#error "GHCODE_TEST_DATA_DIR must point at tests/data"
#endif

namespace testdata {

inline std::string path(const std::string& name) { return std::string(GHCODE_TEST_DATA_DIR) + "/" + name; }

/// Rows of a CSV file without its header. Double quotes group commas; no escaping.
inline std::vector<std::vector<std::string>> read_csv(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("cannot open " + path(name));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        cells.emplace_back();
      } else {
        cells.back() += c;
      }
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

inline std::vector<unsigned> numbers(const std::string& text) { return ghcode::parse_type(text); }

struct PublishedRow {
  unsigned t;
  unsigned s;
  std::vector<unsigned> type;
  unsigned r;
  unsigned k;
};

/// Rank/kernel listing for p = 3, 4 <= t <= 10, one row per nonlinear type.
inline std::vector<PublishedRow> published_rows() {
  std::vector<PublishedRow> out;
  for (const auto& c : read_csv("published_tables.csv")) {
    out.push_back({static_cast<unsigned>(std::stoul(c[0])), static_cast<unsigned>(std::stoul(c[1])),
                   numbers(c[2]), static_cast<unsigned>(std::stoul(c[3])),
                   static_cast<unsigned>(std::stoul(c[4]))});
  }
  return out;
}

inline std::vector<unsigned> as_numbers(const ghcode::GrayWord& w) { return {w.begin(), w.end()}; }

}  // namespace testdata
