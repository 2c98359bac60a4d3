#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "ramanujan/rational.hpp"

namespace ramanujan {

/// The two field realizations every algorithm is written against.
template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Rational>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline double magnitude(double x) { return std::abs(x); }
inline Rational magnitude(const Rational& x) { return abs(x); }

template <Scalar S>
S from_rational(const Rational& r) {
  if constexpr (is_exact_v<S>) {
    return r;
  } else {
    return r.to_double();
  }
}

template <Scalar S>
S from_bigint(const BigInt& n) {
  if constexpr (is_exact_v<S>) {
    return Rational(n);
  } else {
    return n.get_d();
  }
}

/// 1/j! in the scalar's representation; exact for rationals, correctly
/// rounded (and gracefully underflowing) for doubles.
template <Scalar S>
S inverse_factorial(unsigned j) {
  return from_rational<S>(Rational(BigInt(1), factorial(j)));
}

template <Scalar S>
S integer_power(const S& base, unsigned exponent) {
  S result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline std::string render(double x, int digits) { return to_decimal(x, digits); }
inline std::string render(const Rational& x, int digits) { return to_decimal(x, digits); }

inline std::string mode_name(double) { return "float"; }
inline std::string mode_name(const Rational&) { return "rational"; }

}  // namespace ramanujan
