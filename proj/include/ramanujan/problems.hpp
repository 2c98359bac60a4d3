#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramanujan/oracle.hpp"

namespace ramanujan {

struct Problem {
  std::string name;
  Expr expr;
  Rational default_start;
  /// Decimal string of the simple root this problem targets.
  std::string reference_root;
  /// Whether rational mode can expand f at default_start.
  bool rational_at_start = true;

  template <Scalar S>
  DerivativeOracle<S> oracle() const {
    return oracle_from_expression<S>(expr);
  }

  template <Scalar S>
  S start() const {
    return from_rational<S>(default_start);
  }

  Rational reference() const { return Rational::parse(reference_root); }
  double reference_value() const { return reference().to_double(); }
};

/// f(z) = z^m - a started at the integer c.
Problem mth_root_problem(int m, const Rational& a, long c);

/// f(z) = log(1 + z) - a started at 0; its root is e^a - 1.
Problem log_problem(const Rational& a);

/// f(z) = e^z - b started at 0; its root is log b. The jet at 0 is exact
/// (coefficients 1/j!), so the convergents are rational approximations of log b.
Problem log_value_problem(const Rational& b);

/// Registered equations: cubic_2_5, exp3, sin_half, cos_fixed, x_plus_x3,
/// sqrt2. Throws UnknownProblem otherwise.
Problem named_problem(std::string_view name);
std::vector<std::string> problem_names();

/// Rational within 10^-digits of a^(1/m), from an exact integer m-th root.
Rational nth_root_reference(const Rational& a, int m, int digits);

/// Rational within 10^-digits of log b (b > 0), from the atanh series.
Rational log_reference(const Rational& b, int digits);

/// Rational within 10^-digits of e^a, from the exponential series.
Rational exp_reference(const Rational& a, int digits);

}  // namespace ramanujan
