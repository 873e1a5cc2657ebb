#pragma once

#include <string>
#include <vector>

#include "brauer/common.hpp"

namespace brauer {

struct ReportRow {
  std::string instance;
  std::string claim;
  BigInt expected;
  BigInt actual;
  bool pass = false;
};

/// Outcome of a verification suite: exact expected/actual pairs plus
/// free-form observations that do not affect the verdict.
struct Report {
  std::string suite;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  void add(std::string instance, std::string claim, const BigInt& expected, const BigInt& actual) {
    rows.push_back({std::move(instance), std::move(claim), expected, actual, expected == actual});
  }
  void check(std::string instance, std::string claim, bool ok) {
    add(std::move(instance), std::move(claim), 1, ok ? 1 : 0);
  }
  void append(const Report& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.pass ? 0 : 1;
    return n;
  }
};

}  // namespace brauer
