#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ramanujan/jet.hpp"

namespace ramanujan {

/// Supplies the Taylor jet of some f at a query point up to a requested order.
template <Scalar S>
class DerivativeOracle {
 public:
  using Function = std::function<Jet<S>(const S&, int)>;

  DerivativeOracle(Function fn, bool exact_at_any_point = true)
      : fn_(std::move(fn)), exact_at_any_point_(exact_at_any_point) {}

  Jet<S> operator()(const S& z, int order) const {
    Jet<S> jet = fn_(z, order);
    if (jet.order() < order) {
      throw Error(ErrorCode::OracleOrderInsufficient,
                  "oracle returned order " + std::to_string(jet.order()) + ", needed " + std::to_string(order));
    }
    return jet.order() == order ? jet : jet.truncated(order);
  }

  /// False when some points are rejected in rational mode (transcendental
  /// pieces only have exact jets at closed-form points).
  bool exact_at_any_point() const { return exact_at_any_point_; }

 private:
  Function fn_;
  bool exact_at_any_point_;
};

/// Scalar-agnostic expression over one variable z, built from rational
/// constants, +, -, *, /, and elementary functions. Evaluates to a jet in
/// either scalar mode.
class Expr {
 public:
  enum class Op { Variable, Constant, Polynomial, Add, Sub, Mul, Div, Neg, Apply };

  /// The constant 0.
  Expr();

  static Expr variable();
  static Expr constant(Rational value);
  /// c[0] + c[1] z + ... + c[K] z^K, expanded by exact Taylor shift.
  static Expr polynomial(std::vector<Rational> coefficients);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
  friend Expr exp(const Expr& a);
  friend Expr log1p(const Expr& a);
  friend Expr pow(const Expr& a, int exponent);

  /// True when the expression has no transcendental part, so rational mode
  /// can expand it at every point.
  bool algebraic() const;
  std::string str() const;

  template <Scalar S>
  Jet<S> jet(const S& z, int order) const;

 private:
  struct Node {
    Op op;
    Rational value;
    std::vector<Rational> coefficients;
    Elementary fn{ElementaryKind::Power, 0};
    std::vector<Expr> args;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Jet of a polynomial with rational coefficients about z:
/// coefficient j = sum_k C(k, j) c_k z^(k-j).
template <Scalar S>
Jet<S> polynomial_jet(const std::vector<Rational>& coefficients, const S& z, int order) {
  std::vector<S> out(static_cast<std::size_t>(order) + 1, S(0));
  const int degree = static_cast<int>(coefficients.size()) - 1;
  for (int j = 0; j <= std::min(order, degree); ++j) {
    S acc(0);
    S zpow(1);
    for (int k = j; k <= degree; ++k) {
      acc += from_bigint<S>(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
             from_rational<S>(coefficients[k]) * zpow;
      zpow *= z;
    }
    out[j] = acc;
  }
  return Jet<S>(z, std::move(out));
}

template <Scalar S>
Jet<S> Expr::jet(const S& z, int order) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Variable: return Jet<S>::variable(z, order);
    case Op::Constant: return Jet<S>::constant(z, from_rational<S>(n.value), order);
    case Op::Polynomial: return polynomial_jet(n.coefficients, z, order);
    case Op::Add: return n.args[0].jet(z, order) + n.args[1].jet(z, order);
    case Op::Sub: return n.args[0].jet(z, order) - n.args[1].jet(z, order);
    case Op::Mul: return jet_mul(n.args[0].jet(z, order), n.args[1].jet(z, order));
    case Op::Div: return n.args[0].jet(z, order) / n.args[1].jet(z, order);
    case Op::Neg: return -n.args[0].jet(z, order);
    case Op::Apply: return compose(n.fn, n.args[0].jet(z, order));
  }
  throw Error(ErrorCode::InvalidParameter, "malformed expression");
}

template <Scalar S>
DerivativeOracle<S> oracle_from_expression(Expr expr) {
  const bool exact = !is_exact_v<S> || expr.algebraic();
  return DerivativeOracle<S>([e = std::move(expr)](const S& z, int order) { return e.jet(z, order); }, exact);
}

}  // namespace ramanujan
