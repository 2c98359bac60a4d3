#include "ramanujan/oracle.hpp"

#include <sstream>

namespace ramanujan {

std::string to_string(const Elementary& e) {
  switch (e.kind) {
    case ElementaryKind::Sin: return "sin";
    case ElementaryKind::Cos: return "cos";
    case ElementaryKind::Exp: return "exp";
    case ElementaryKind::Log1p: return "log1p";
    case ElementaryKind::Power: return "pow" + std::to_string(e.exponent);
  }
  return "?";
}

Expr Expr::make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }

Expr::Expr() : node_(constant(Rational(0)).node_) {}

Expr Expr::variable() { return make(Node{Op::Variable, {}, {}, {}, {}}); }

Expr Expr::constant(Rational value) { return make(Node{Op::Constant, std::move(value), {}, {}, {}}); }

Expr Expr::polynomial(std::vector<Rational> coefficients) {
  if (coefficients.empty()) coefficients.emplace_back(0);
  return make(Node{Op::Polynomial, {}, std::move(coefficients), {}, {}});
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make({Expr::Op::Add, {}, {}, {}, {a, b}}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make({Expr::Op::Sub, {}, {}, {}, {a, b}}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make({Expr::Op::Mul, {}, {}, {}, {a, b}}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make({Expr::Op::Div, {}, {}, {}, {a, b}}); }
Expr operator-(const Expr& a) { return Expr::make({Expr::Op::Neg, {}, {}, {}, {a}}); }

Expr sin(const Expr& a) { return Expr::make({Expr::Op::Apply, {}, {}, {ElementaryKind::Sin, 0}, {a}}); }
Expr cos(const Expr& a) { return Expr::make({Expr::Op::Apply, {}, {}, {ElementaryKind::Cos, 0}, {a}}); }
Expr exp(const Expr& a) { return Expr::make({Expr::Op::Apply, {}, {}, {ElementaryKind::Exp, 0}, {a}}); }
Expr log1p(const Expr& a) { return Expr::make({Expr::Op::Apply, {}, {}, {ElementaryKind::Log1p, 0}, {a}}); }

Expr pow(const Expr& a, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidParameter, "negative exponent in pow");
  return Expr::make({Expr::Op::Apply, {}, {}, {ElementaryKind::Power, exponent}, {a}});
}

bool Expr::algebraic() const {
  const Node& n = *node_;
  if (n.op == Op::Apply && n.fn.kind != ElementaryKind::Power) return false;
  for (const auto& arg : n.args) {
    if (!arg.algebraic()) return false;
  }
  return true;
}

std::string Expr::str() const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Variable: return "z";
    case Op::Constant: return n.value.str();
    case Op::Polynomial: {
      std::ostringstream os;
      bool first = true;
      for (std::size_t k = n.coefficients.size(); k-- > 0;) {
        if (n.coefficients[k].is_zero()) continue;
        if (!first) os << " + ";
        os << n.coefficients[k];
        if (k >= 1) os << "*z";
        if (k >= 2) os << "^" << k;
        first = false;
      }
      return first ? "0" : os.str();
    }
    case Op::Add: return "(" + n.args[0].str() + " + " + n.args[1].str() + ")";
    case Op::Sub: return "(" + n.args[0].str() + " - " + n.args[1].str() + ")";
    case Op::Mul: return n.args[0].str() + "*" + n.args[1].str();
    case Op::Div: return n.args[0].str() + "/" + n.args[1].str();
    case Op::Neg: return "-" + n.args[0].str();
    case Op::Apply:
      if (n.fn.kind == ElementaryKind::Power) return n.args[0].str() + "^" + std::to_string(n.fn.exponent);
      return to_string(n.fn) + "(" + n.args[0].str() + ")";
  }
  return "?";
}

}  // namespace ramanujan
