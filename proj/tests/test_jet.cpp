#include <doctest.h>

#include <cmath>
#include <random>

#include "ramanujan/oracle.hpp"
#include "test_support.hpp"

using namespace ramanujan;
using R = Rational;

namespace {

Jet<R> rjet(R point, std::vector<R> c) { return Jet<R>(std::move(point), std::move(c)); }

std::vector<R> coeffs(const Jet<R>& j) { return {j.coefficients().begin(), j.coefficients().end()}; }

}  // namespace

TEST_CASE("jet_mul multiplies truncated series") {
  const R zero(0);
  CHECK(coeffs(jet_mul(rjet(zero, {1, 1, 0}), rjet(zero, {1, -1, 0}))) == std::vector<R>{1, 0, -1});

  // (z^2 - 2)^2 about z = 1, expanded by brute force: coefficients [1, -4, 2, 4].
  const auto f = rjet(R(1), {-1, 2, 1, 0});
  const auto brute = testing::taylor_about(testing::poly_mul({-2, 0, 1}, {-2, 0, 1}), R(1), 3);
  CHECK(coeffs(jet_mul(f, f)) == brute);
  CHECK(coeffs(jet_mul(f, f)) == std::vector<R>{1, -4, 2, 4});

  CHECK(jet_mul(f, Jet<R>::constant(R(1), R(1), 3)) == f);
}

TEST_CASE("jet arithmetic keeps the smaller order and rejects mixed points") {
  const auto a = rjet(R(0), {1, 2, 3, 4});
  const auto b = rjet(R(0), {5, 6});
  CHECK((a + b).order() == 1);
  CHECK(jet_mul(a, b).order() == 1);
  try {
    (void)(a + rjet(R(1), {1, 2}));
    FAIL("expected MismatchedPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedPoint);
  }
}

TEST_CASE("jet_reciprocal") {
  CHECK(coeffs(jet_reciprocal(Jet<R>::constant(R(0), R(2), 3))) == std::vector<R>{make_rational(1, 2), 0, 0, 0});

  // 1/(z^2-2) about 1: P0 = 1/f = -1, P1 = -f'/f^2 = -2, P2 = -f''/f^2 + 2f'^2/f^3 = -10 -> coefficient -5.
  const auto f = rjet(R(1), {-1, 2, 1});
  CHECK(coeffs(jet_reciprocal(f)) == std::vector<R>{-1, -2, -5});

  const auto g = rjet(R(0), {3, -1, 4, 1, -5, 9});
  CHECK(jet_mul(g, jet_reciprocal(g)) == Jet<R>::constant(R(0), R(1), 5));

  try {
    (void)jet_reciprocal(rjet(R(0), {0, 1}));
    FAIL("expected DivisionByZeroAtPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZeroAtPoint);
  }
}

TEST_CASE("elementary jets in rational mode") {
  CHECK(coeffs(elementary_jet<R>({ElementaryKind::Power, 2}, R(1), 3)) == std::vector<R>{1, 2, 1, 0});
  CHECK(coeffs(elementary_jet<R>({ElementaryKind::Log1p}, R(0), 3)) ==
        std::vector<R>{0, 1, make_rational(-1, 2), make_rational(1, 3)});
  CHECK(coeffs(elementary_jet<R>({ElementaryKind::Cos}, R(0), 2)) == std::vector<R>{1, 0, make_rational(-1, 2)});
  CHECK(coeffs(elementary_jet<R>({ElementaryKind::Sin}, R(0), 4)) ==
        std::vector<R>{0, 1, 0, make_rational(-1, 6), 0});
  CHECK(coeffs(elementary_jet<R>({ElementaryKind::Exp}, R(0), 3)) ==
        std::vector<R>{1, 1, make_rational(1, 2), make_rational(1, 6)});

  const Expr z = Expr::variable();
  CHECK(coeffs((z - cos(z)).jet(R(0), 2)) == std::vector<R>{-1, 1, make_rational(1, 2)});
  CHECK(coeffs((pow(z, 2) - Expr::constant(2)).jet(R(1), 3)) == std::vector<R>{-1, 2, 1, 0});

  for (auto kind : {ElementaryKind::Sin, ElementaryKind::Cos, ElementaryKind::Exp, ElementaryKind::Log1p}) {
    try {
      (void)elementary_jet<R>({kind}, make_rational(1, 3), 2);
      FAIL("expected UnsupportedInRationalMode");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedInRationalMode);
    }
  }
  CHECK_THROWS_AS(elementary_jet<double>({ElementaryKind::Log1p}, -1.0, 2), Error);
}

TEST_CASE("z - cos z at 0 agrees with finite differences") {
  const auto j = (Expr::variable() - cos(Expr::variable())).jet(0.0, 2);
  const auto f = [](double x) { return x - std::cos(x); };
  CHECK(j[0] == doctest::Approx(-1.0));
  CHECK(testing::central_first(f, 0.0) == doctest::Approx(j[1]).epsilon(1e-6));
  CHECK(testing::central_second(f, 0.0) == doctest::Approx(2 * j[2]).epsilon(1e-6));
}

TEST_CASE("oracle_from_expression") {
  const auto cubic = oracle_from_expression<R>(Expr::polynomial({-5, -2, 0, 1}));
  CHECK(coeffs(cubic(R(2), 3)) == std::vector<R>{-1, 10, 6, 1});
  CHECK(cubic.exact_at_any_point());

  const auto composed = oracle_from_expression<R>(pow(Expr::variable(), 3) - Expr::constant(2) * Expr::variable() -
                                                  Expr::constant(5));
  CHECK(coeffs(composed(R(2), 3)) == std::vector<R>{-1, 10, 6, 1});

  const auto e3 = oracle_from_expression<double>(exp(Expr::variable()) - Expr::constant(3));
  const auto j = e3(1.0, 1);
  CHECK(j[0] == doctest::Approx(std::exp(1.0) - 3.0));
  const auto f = [](double x) { return std::exp(x) - 3.0; };
  CHECK(testing::central_first(f, 1.0) == doctest::Approx(j[1]).epsilon(1e-6));
  CHECK_FALSE(oracle_from_expression<R>(exp(Expr::variable())).exact_at_any_point());

  const auto seven = oracle_from_expression<R>(Expr::constant(7));
  CHECK(coeffs(seven(make_rational(9, 4), 2)) == std::vector<R>{7, 0, 0});
}

TEST_CASE("composition of elementary functions with a nontrivial inner jet") {
  // exp(sin z) about 0.4 against finite differences.
  const Expr e = exp(sin(Expr::variable()));
  const auto j = e.jet(0.4, 3);
  const auto f = [](double x) { return std::exp(std::sin(x)); };
  CHECK(j[0] == doctest::Approx(f(0.4)));
  CHECK(testing::central_first(f, 0.4) == doctest::Approx(j[1]).epsilon(1e-6));
  CHECK(testing::central_second(f, 0.4) == doctest::Approx(2 * j[2]).epsilon(1e-6));

  // log1p(z^2) at 0 in rational mode: z^2 - z^4/2 + ...
  const auto r = log1p(pow(Expr::variable(), 2)).jet(R(0), 6);
  CHECK(coeffs(r) == std::vector<R>{0, 0, 1, 0, make_rational(-1, 2), 0, make_rational(1, 3)});
}

TEST_CASE("property: Leibniz product matches brute-force polynomial expansion") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pa = testing::random_poly(rng, 4);
    const auto pb = testing::random_poly(rng, 4);
    const R z = testing::random_rational(rng, 5, 4);
    const int order = 8;
    const auto ja = polynomial_jet<R>(pa, z, order);
    const auto jb = polynomial_jet<R>(pb, z, order);
    REQUIRE(coeffs(ja) == testing::taylor_about(pa, z, order));
    REQUIRE(coeffs(jet_mul(ja, jb)) == testing::taylor_about(testing::poly_mul(pa, pb), z, order));
  }
}

TEST_CASE("property: reciprocal identity") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pa = testing::random_poly(rng, 5);
    const R z = testing::random_rational(rng, 5, 4);
    const auto ja = polynomial_jet<R>(pa, z, 7);
    if (ja.value().is_zero()) continue;
    REQUIRE(jet_mul(ja, jet_reciprocal(ja)) == Jet<R>::constant(z, R(1), 7));
  }
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c{1.5 + u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const Jet<double> a(0.0, c);
    const auto unit = jet_mul(a, jet_reciprocal(a));
    REQUIRE(unit[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 5; ++k) REQUIRE(std::abs(unit[k]) <= 1e-12);
  }
}

TEST_CASE("property: transcendental jets agree with central finite differences") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-0.9, 2.0);
  const std::pair<ElementaryKind, double (*)(double)> kinds[] = {
      {ElementaryKind::Sin, [](double x) { return std::sin(x); }},
      {ElementaryKind::Cos, [](double x) { return std::cos(x); }},
      {ElementaryKind::Exp, [](double x) { return std::exp(x); }},
      {ElementaryKind::Log1p, [](double x) { return std::log1p(x); }},
  };
  for (const auto& [kind, fn] : kinds) {
    for (int i = 0; i < 10; ++i) {
      const double x = u(rng);
      const auto j = elementary_jet<double>({kind}, x, 2);
      REQUIRE(j[0] == doctest::Approx(fn(x)));
      REQUIRE(testing::central_first(fn, x) == doctest::Approx(j[1]).epsilon(1e-6));
      REQUIRE(testing::central_second(fn, x) == doctest::Approx(2 * j[2]).epsilon(1e-6));
    }
  }
}

TEST_CASE("property: oracle prefix consistency") {
  const Expr z = Expr::variable();
  const std::vector<Expr> exprs = {z - cos(z), exp(z) - Expr::constant(3), z - sin(z) - Expr::constant(make_rational(1, 2)),
                                   Expr::polynomial({-5, -2, 0, 1}), log1p(z) - Expr::constant(1)};
  for (const auto& e : exprs) {
    const auto oracle = oracle_from_expression<double>(e);
    for (double x : {0.0, 0.3, 1.1}) {
      const auto hi = oracle(x, 9);
      for (int m = 0; m < 9; ++m) REQUIRE(hi.truncated(m) == oracle(x, m));
    }
  }
  const auto exact = oracle_from_expression<R>(z - cos(z));
  CHECK(exact(R(0), 12).truncated(5) == exact(R(0), 5));
}
