#include "ramanujan/rational.hpp"

#include <cmath>
#include <ostream>

#include "ramanujan/error.hpp"

namespace ramanujan {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const bool negative = !digits.empty() && digits.front() == '-';
  const std::string_view body = std::string_view(digits).substr(negative ? 1 : 0);
  if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorCode::InvalidParameter, "not a rational literal: '" + std::string(whole) + "'");
  }
  return BigInt(digits, 10);
}

BigInt pow10(int exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::DomainError, "non-finite double has no rational value");
  Rational r;
  r.value_ = mpq_class(value);
  return r;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string joined(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (joined.empty() || joined == "-" || joined == "+") joined += "0";
    joined += frac;
    return Rational(parse_integer(joined, text), pow10(static_cast<int>(frac.size())));
  }
  return Rational(parse_integer(text, text));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational make_rational(const BigInt& p, const BigInt& q) { return Rational(p, q); }

Rational make_rational(long long p, long long q) {
  return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 1) throw Error(ErrorCode::InvalidParameter, "to_decimal needs at least one digit");
  const BigInt scale = pow10(digits);
  BigInt magnitude = abs(value.num()) * scale;
  const BigInt den = value.den();
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), magnitude.get_mpz_t(), den.get_mpz_t());
  if (2 * remainder >= den) quotient += 1;

  std::string body = quotient.get_str(10);
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  if (value.sign() < 0 && quotient != 0) body.insert(0, "-");
  return body;
}

std::string to_decimal(double value, int digits) { return to_decimal(Rational::from_double(value), digits); }

int matching_digits(const Rational& a, const Rational& b) {
  if (a == b) return kMatchingDigitsCap;
  // Values further apart than 10^-d cannot round to the same d-digit string,
  // so the loop ends after about -log10|a-b| steps.
  int agreed = 0;
  for (int d = 1; d < kMatchingDigitsCap; ++d) {
    if (to_decimal(a, d) != to_decimal(b, d)) break;
    agreed = d;
  }
  return agreed;
}

int matching_digits(double a, double b) { return matching_digits(Rational::from_double(a), Rational::from_double(b)); }

}  // namespace ramanujan
