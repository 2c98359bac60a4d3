#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "ramanujan/error.hpp"
#include "ramanujan/rational.hpp"

using namespace ramanujan;

namespace {

bool canonical(const Rational& r) {
  BigInt g;
  const BigInt n = abs(r.num());
  const BigInt d = r.den();
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return d > 0 && g == 1;
}

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("make_rational reduces and normalizes sign") {
  CHECK(make_rational(375, 541).str() == "375/541");
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(2, 4).str() == "1/2");
  CHECK(make_rational(3, -6).str() == "-1/2");
  CHECK(make_rational(0, -7).str() == "0");
  CHECK(make_rational(0, -7).den() == 1);
}

TEST_CASE("zero denominator and division by zero are reported") {
  try {
    make_rational(1, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("parse accepts fractions, integers and decimals") {
  CHECK(Rational::parse("6/4") == make_rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("1.25") == make_rational(5, 4));
  CHECK(Rational::parse("-.5") == make_rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("to_decimal rounds half away from zero by exact long division") {
  CHECK(to_decimal(make_rational(13, 19), 6) == "0.684211");
  CHECK(to_decimal(make_rational(1, 2), 3) == "0.500");
  CHECK(to_decimal(make_rational(1, 8), 2) == "0.13");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(make_rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(12), 1) == "12.0");
  CHECK(to_decimal(0.73908513321516, 14) == "0.73908513321516");
}

TEST_CASE("to_decimal of 50623/24337 matches the cube root of 9 to ten digits") {
  // Independent oracle: long division by hand-rolled integer arithmetic.
  long long rem = 50623 % 24337;
  std::string digits;
  for (int i = 0; i < 11; ++i) {
    rem *= 10;
    digits += static_cast<char>('0' + rem / 24337);
    rem %= 24337;
  }
  const std::string rendered = to_decimal(make_rational(50623, 24337), 10);
  CHECK(rendered == "2.0800838230");
  // Truncated division gives 2.08008382298..., rounding lifts the tenth digit.
  CHECK(digits.substr(0, 10) == "0800838229");
  // Cube root of 9 = 2.080083823051904...; first nine fractional digits agree.
  CHECK(rendered.substr(0, 11) == "2.080083823");
}

TEST_CASE("matching_digits reproduces the sqrt(2) decimal-place counts") {
  // sqrt(2) to 40 places.
  const Rational root2 = Rational::parse("1.4142135623730950488016887242096980785697");
  CHECK(matching_digits(make_rational(99, 70), root2) == 3);
  CHECK(matching_digits(make_rational(239, 169), root2) == 4);
  CHECK(matching_digits(make_rational(577, 408), root2) == 4);
  CHECK(matching_digits(make_rational(1393, 985), root2) == 5);
  CHECK(matching_digits(make_rational(3363, 2378), root2) == 7);
  CHECK(matching_digits(make_rational(8119, 5741), root2) == 7);
  CHECK(matching_digits(make_rational(19601, 13860), root2) == 8);
  CHECK(matching_digits(make_rational(47321, 33461), root2) == 9);
}

TEST_CASE("matching_digits edge cases") {
  const Rational x = make_rational(22, 7);
  CHECK(matching_digits(x, x) == kMatchingDigitsCap);
  CHECK(matching_digits(1.0, 1.0) == kMatchingDigitsCap);
  CHECK(matching_digits(Rational(1), Rational(2)) == 0);
  CHECK(matching_digits(0.5, 0.5000001) == 6);
}

TEST_CASE("property: arithmetic stays canonical and obeys field laws exactly") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_rational(rng, 1000);
    const Rational b = random_rational(rng, 1000);
    const Rational c = random_rational(rng, 1000);
    REQUIRE(canonical(a + b));
    REQUIRE(canonical(a - b));
    REQUIRE(canonical(a * b));
    if (!b.is_zero()) REQUIRE(canonical(a / b));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) REQUIRE(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("property: to_decimal agrees with float formatting for small p/q") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-999999, 999999);
  std::uniform_int_distribution<long> den(1, 999999);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const long p = num(rng);
    const long q = den(rng);
    const double value = static_cast<double>(p) / static_cast<double>(q);
    const int int_digits = std::abs(value) >= 1.0 ? static_cast<int>(std::log10(std::abs(value))) + 1 : 0;
    // Binary64 carries about 15 significant decimal digits.
    const int d = std::min(1 + i % 15, 15 - int_digits);
    if (d < 1) continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", d + 3, value);
    const std::string wide(buf);
    // Skip values whose float rendering sits within rounding noise of a tie.
    const std::string guard = wide.substr(wide.size() - 3);
    if (guard == "500" || guard == "499" || guard == "501") continue;
    const std::string exact = to_decimal(make_rational(p, q), d);
    std::snprintf(buf, sizeof buf, "%.*f", d, value);
    std::string fl(buf);
    if (fl[0] == '-' && fl.find_first_not_of("-0.") == std::string::npos) fl.erase(0, 1);
    CHECK_MESSAGE(exact == fl, p << "/" << q << " at " << d);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("property: matching_digits is symmetric") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng, 100000);
    const Rational b = a + make_rational(1, 1 + static_cast<long>(rng() % 1000000));
    CHECK(matching_digits(a, b) == matching_digits(b, a));
  }
}
