#include "ramanujan/problems.hpp"

#include <array>

namespace ramanujan {

namespace {

constexpr int kReferenceDigits = 60;
constexpr int kStoredDigits = 30;

BigInt pow10(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

/// Rounds to a rational with denominator 10^digits.
Rational round_to(const Rational& x, int digits) {
  const BigInt scale = pow10(digits);
  BigInt scaled = x.num() * scale * 2 + x.den();
  BigInt twice_den = x.den() * 2;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), twice_den.get_mpz_t());
  return Rational(q, scale);
}

struct Named {
  std::string_view name;
  Problem (*make)();
};

Problem cubic() {
  return {"cubic_2_5", Expr::polynomial({-5, -2, 0, 1}), 2, "2.0945514815423265914823865405793", true};
}

Problem exp3() {
  return {"exp3", exp(Expr::variable()) - Expr::constant(3), 1, "1.0986122886681096913952452369225", false};
}

Problem sin_half() {
  const Expr z = Expr::variable();
  return {"sin_half", z - sin(z) - Expr::constant(make_rational(1, 2)), 1, "1.4973003890958923146815215409476",
          false};
}

Problem cos_fixed() {
  const Expr z = Expr::variable();
  // Start 0 is a closed-form point for cos, so rational mode works there.
  return {"cos_fixed", z - cos(z), 0, "0.73908513321516064165531208767387", true};
}

Problem x_plus_x3() {
  return {"x_plus_x3", Expr::polynomial({-1, 1, 0, 1}), 0, "0.68232780382801932736948373971105", true};
}

Problem sqrt2() {
  Problem p = mth_root_problem(2, 2, 1);
  p.name = "sqrt2";
  return p;
}

constexpr std::array<Named, 6> kRegistry{{
    {"cubic_2_5", cubic},
    {"exp3", exp3},
    {"sin_half", sin_half},
    {"cos_fixed", cos_fixed},
    {"x_plus_x3", x_plus_x3},
    {"sqrt2", sqrt2},
}};

}  // namespace

Problem mth_root_problem(int m, const Rational& a, long c) {
  if (m < 2) throw Error(ErrorCode::InvalidParameter, "m-th root needs m >= 2");
  if (a <= Rational(0)) throw Error(ErrorCode::InvalidParameter, "m-th root needs a > 0");
  if (c < 1) throw Error(ErrorCode::InvalidParameter, "m-th root start c must be a positive integer");
  Problem p;
  p.name = "root" + std::to_string(m) + "_" + a.str();
  p.expr = pow(Expr::variable(), m) - Expr::constant(a);
  p.default_start = Rational(c);
  p.reference_root = to_decimal(nth_root_reference(a, m, kReferenceDigits), kStoredDigits);
  return p;
}

Problem log_problem(const Rational& a) {
  Problem p;
  p.name = "log1p_" + a.str();
  p.expr = log1p(Expr::variable()) - Expr::constant(a);
  p.default_start = 0;
  p.reference_root = to_decimal(exp_reference(a, kReferenceDigits) - Rational(1), kStoredDigits);
  return p;
}

Problem log_value_problem(const Rational& b) {
  if (b <= Rational(0)) throw Error(ErrorCode::InvalidParameter, "log b needs b > 0");
  Problem p;
  p.name = "ln_" + b.str();
  p.expr = exp(Expr::variable()) - Expr::constant(b);
  p.default_start = 0;
  p.reference_root = to_decimal(log_reference(b, kReferenceDigits), kStoredDigits);
  return p;
}

Problem named_problem(std::string_view name) {
  for (const auto& entry : kRegistry) {
    if (entry.name == name) return entry.make();
  }
  throw Error(ErrorCode::UnknownProblem, "no problem named '" + std::string(name) + "'");
}

std::vector<std::string> problem_names() {
  std::vector<std::string> out;
  for (const auto& entry : kRegistry) out.emplace_back(entry.name);
  return out;
}

Rational nth_root_reference(const Rational& a, int m, int digits) {
  if (m < 1 || a < Rational(0)) throw Error(ErrorCode::InvalidParameter, "nth_root_reference needs m >= 1, a >= 0");
  // (p/q)^(1/m) = (p q^(m-1))^(1/m) / q; scale by 10^digits before the
  // integer root so the floor loses less than 10^-digits.
  const BigInt q = a.den();
  BigInt qpow;
  mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m - 1));
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) * static_cast<unsigned long>(m));
  BigInt radicand = a.num() * qpow * scale;
  BigInt root;
  mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational(root, q * pow10(digits));
}

Rational log_reference(const Rational& b, int digits) {
  if (b <= Rational(0)) throw Error(ErrorCode::InvalidParameter, "log of nonpositive value");
  // log b = 2 atanh(x), x = (b-1)/(b+1), |x| < 1.
  const Rational x = (b - Rational(1)) / (b + Rational(1));
  const Rational x2 = x * x;
  const Rational tol(BigInt(1), pow10(digits + 5));
  Rational sum;
  Rational power = x;
  for (int k = 0;; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    sum += term;
    // Remaining tail is below |term| * x^2 / (1 - x^2).
    if (abs(term) * x2 / (Rational(1) - x2) < tol || x.is_zero()) break;
    power = round_to(power * x2, digits + 10);
  }
  return round_to(sum * Rational(2), digits + 2);
}

Rational exp_reference(const Rational& a, int digits) {
  const Rational tol(BigInt(1), pow10(digits + 5));
  Rational sum(1);
  Rational term(1);
  for (int k = 1;; ++k) {
    term = round_to(term * a / Rational(k), digits + 10);
    sum += term;
    if (Rational(k) > abs(a) * Rational(2) && abs(term) < tol) break;
  }
  return round_to(sum, digits + 2);
}

}  // namespace ramanujan
