#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramanujan/rational.hpp"

namespace ramanujan::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNotConverged = 2,  // MaxIterations, or a table row missing its target
  kStepUndefined = 3,
};

/// One report value. Fractions serialize to JSON as {"num": "..", "den": ".."};
/// decimals stay strings so every format carries the same digits.
struct Cell {
  enum class Kind { Empty, Text, Integer, Decimal, Fraction, Bool };

  Kind kind = Kind::Empty;
  std::string text;
  long long integer = 0;
  std::optional<Rational> fraction;
  bool flag = false;

  static Cell empty() { return {}; }
  static Cell of_text(std::string s) { return {Kind::Text, std::move(s), 0, std::nullopt, false}; }
  static Cell of_int(long long v) { return {Kind::Integer, std::to_string(v), v, std::nullopt, false}; }
  static Cell of_decimal(std::string s) { return {Kind::Decimal, std::move(s), 0, std::nullopt, false}; }
  static Cell of_fraction(const Rational& r) { return {Kind::Fraction, r.str(), 0, r, false}; }
  static Cell of_bool(bool b) { return {Kind::Bool, b ? "true" : "false", 0, std::nullopt, b}; }
};

struct Report {
  std::string command;
  std::string title;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Text, Csv, Json };

void write_report(const Report& report, Format format, std::ostream& out);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramanujan::cli
