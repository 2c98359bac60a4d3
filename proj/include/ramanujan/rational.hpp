#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ramanujan {

using BigInt = mpz_class;

/// Exact rational number, always kept in canonical form: the denominator is
/// positive and gcd(|num|, den) = 1, zero is 0/1. Division by zero raises
/// ErrorCode::ZeroDenominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(BigInt(static_cast<long>(value))) {}  // NOLINT

  explicit Rational(const BigInt& integer) : value_(integer) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Exact value of a finite binary64 number.
  static Rational from_double(double value);

  /// Parses "p", "p/q", or a plain decimal literal such as "-1.25".
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "p/q" in lowest terms, or "p" for integers.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Canonical p/q; throws ZeroDenominator when q == 0.
Rational make_rational(const BigInt& p, const BigInt& q);
Rational make_rational(long long p, long long q);

Rational pow(const Rational& base, unsigned exponent);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Round-half-away-from-zero decimal expansion with exactly `digits`
/// fractional digits, computed by exact long division. A leading '-' is
/// emitted only when the rounded magnitude is nonzero.
std::string to_decimal(const Rational& value, int digits);
std::string to_decimal(double value, int digits);

/// Reported by matching_digits for identical inputs.
inline constexpr int kMatchingDigitsCap = 100;

/// Largest d such that a and b, rendered with to_decimal at every precision
/// 1..d, produce identical strings. Symmetric; identical values give the cap.
int matching_digits(const Rational& a, const Rational& b);
int matching_digits(double a, double b);

}  // namespace ramanujan
