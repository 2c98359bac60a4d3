#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramanujan/problems.hpp"

namespace ramanujan {

/// One row of a rational-approximation table: a target irrational, the
/// published fraction, and its stated digit count.
struct DigitRowSpec {
  std::string label;
  Problem problem;
  Rational expected_fraction;
  int digit_target;
};

/// Outcome of scanning n = 1..n_max in exact rational mode for one row.
struct DigitRowResult {
  DigitRowSpec spec;
  int n_max = 0;
  /// Smallest n whose convergent reaches the digit target, with that convergent.
  std::optional<int> first_n_meeting_target;
  std::optional<Rational> convergent_at_target;
  int digits_at_target = 0;
  /// n at which the convergent equals the published fraction exactly.
  std::optional<int> exact_match_n;
  /// Digits the published fraction itself achieves against the reference.
  int expected_fraction_digits = 0;
  int best_digits = 0;

  bool target_met() const { return first_n_meeting_target.has_value(); }
};

std::vector<DigitRowSpec> table1_rows();
std::vector<DigitRowSpec> table2_rows();

DigitRowResult scan_digit_row(const DigitRowSpec& row, int n_max = 64);
std::vector<DigitRowResult> reproduce_digit_table(const std::vector<DigitRowSpec>& rows, int n_max = 64);

/// A float-mode grid compared cell by cell with published 14-decimal values.
struct GridCell {
  int row = 0;
  int column = 0;
  double expected = 0.0;
  std::optional<double> computed;

  double deviation() const;
};

struct GridTable {
  std::string title;
  std::string row_label;
  std::vector<std::string> columns;
  int rows = 0;
  /// Starting point used for each column.
  std::vector<double> starts;
  std::vector<GridCell> cells;

  double max_deviation() const;
  int cells_within(double tolerance) const;
  bool complete() const;
};

/// Convergents n = 0..9 (row 0 is the start) of x^3-2x-5 at 2, e^x-3 at 1
/// and x-sin x-1/2 at 2. The published sin column labels its start as 1, so
/// its row 0 cell cannot match.
GridTable reproduce_table3();

/// Iterates z_1.. of z - cos z from 0 for n = 1..4, default stopping rules.
GridTable reproduce_table4();

/// Tolerance applied to every published grid cell (one unit in the 14th place
/// plus rounding slack).
inline constexpr double kGridTolerance = 1e-13;

}  // namespace ramanujan
