#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ramanujan/error.hpp"
#include "ramanujan/scalar.hpp"

namespace ramanujan {

/// Truncated Taylor expansion of a function about `point`:
/// coefficients[j] = f^(j)(point) / j!, j = 0..order.
template <Scalar S>
class Jet {
 public:
  Jet(S point, std::vector<S> coefficients) : point_(std::move(point)), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidParameter, "jet needs at least one coefficient");
  }

  static Jet constant(const S& point, const S& value, int order) {
    std::vector<S> c(static_cast<std::size_t>(order) + 1, S(0));
    c[0] = value;
    return Jet(point, std::move(c));
  }

  /// The identity function z -> z expanded about `point`.
  static Jet variable(const S& point, int order) {
    std::vector<S> c(static_cast<std::size_t>(order) + 1, S(0));
    c[0] = point;
    if (order >= 1) c[1] = S(1);
    return Jet(point, std::move(c));
  }

  const S& point() const { return point_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const S& value() const { return coeffs_.front(); }
  const S& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  S& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }
  std::span<const S> coefficients() const { return coeffs_; }

  /// f^(j)(point), i.e. j! * coefficient j.
  S derivative(int j) const { return (*this)[j] * from_bigint<S>(factorial(static_cast<unsigned>(j))); }

  Jet truncated(int order) const {
    const int keep = std::min(order, this->order());
    return Jet(point_, std::vector<S>(coeffs_.begin(), coeffs_.begin() + keep + 1));
  }

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  S point_;
  std::vector<S> coeffs_;
};

namespace detail {

template <Scalar S>
void require_same_point(const Jet<S>& a, const Jet<S>& b) {
  if (!(a.point() == b.point())) throw Error(ErrorCode::MismatchedPoint, "jets expanded about different points");
}

template <Scalar S>
int common_order(const Jet<S>& a, const Jet<S>& b) {
  require_same_point(a, b);
  return std::min(a.order(), b.order());
}

}  // namespace detail

template <Scalar S>
Jet<S> operator+(const Jet<S>& a, const Jet<S>& b) {
  const int n = detail::common_order(a, b);
  std::vector<S> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[j] = a[j] + b[j];
  return Jet<S>(a.point(), std::move(c));
}

template <Scalar S>
Jet<S> operator-(const Jet<S>& a, const Jet<S>& b) {
  const int n = detail::common_order(a, b);
  std::vector<S> c(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[j] = a[j] - b[j];
  return Jet<S>(a.point(), std::move(c));
}

template <Scalar S>
Jet<S> operator-(const Jet<S>& a) {
  std::vector<S> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return Jet<S>(a.point(), std::move(c));
}

template <Scalar S>
Jet<S> operator*(const Jet<S>& a, const S& k) {
  std::vector<S> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= k;
  return Jet<S>(a.point(), std::move(c));
}

/// Cauchy product, truncated to the smaller order.
template <Scalar S>
Jet<S> jet_mul(const Jet<S>& a, const Jet<S>& b) {
  const int n = detail::common_order(a, b);
  std::vector<S> c(static_cast<std::size_t>(n) + 1, S(0));
  for (int i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (int k = 0; i + k <= n; ++k) c[i + k] += a[i] * b[k];
  }
  return Jet<S>(a.point(), std::move(c));
}

template <Scalar S>
Jet<S> operator*(const Jet<S>& a, const Jet<S>& b) {
  return jet_mul(a, b);
}

/// Jet of 1/f: r[0] = 1/a[0], r[n] = -(1/a[0]) * sum_{k=1..n} a[k] r[n-k].
template <Scalar S>
Jet<S> jet_reciprocal(const Jet<S>& a) {
  if (is_zero(a.value())) throw Error(ErrorCode::DivisionByZeroAtPoint, "reciprocal of a jet whose value is zero");
  const int n = a.order();
  const S inv = S(1) / a.value();
  std::vector<S> r(static_cast<std::size_t>(n) + 1, S(0));
  r[0] = inv;
  for (int m = 1; m <= n; ++m) {
    S acc(0);
    for (int k = 1; k <= m; ++k) acc += a[k] * r[m - k];
    r[m] = -inv * acc;
  }
  return Jet<S>(a.point(), std::move(r));
}

template <Scalar S>
Jet<S> operator/(const Jet<S>& a, const Jet<S>& b) {
  return jet_mul(a, jet_reciprocal(b));
}

enum class ElementaryKind { Sin, Cos, Exp, Log1p, Power };

struct Elementary {
  ElementaryKind kind;
  int exponent = 0;  // only for Power

  friend bool operator==(const Elementary&, const Elementary&) = default;
};

std::string to_string(const Elementary& e);

/// Exact Taylor jet of a named elementary function about z.
///
/// Power(m) works at any point in both modes. In rational mode the
/// transcendental kinds only have rational coefficients at z = 0; any other
/// point is rejected with UnsupportedInRationalMode rather than approximated.
template <Scalar S>
Jet<S> elementary_jet(const Elementary& e, const S& z, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidParameter, "negative jet order");
  const auto size = static_cast<std::size_t>(order) + 1;
  std::vector<S> c(size, S(0));

  if (e.kind == ElementaryKind::Power) {
    if (e.exponent < 0) throw Error(ErrorCode::InvalidParameter, "power jets need a nonnegative exponent");
    const unsigned m = static_cast<unsigned>(e.exponent);
    for (unsigned j = 0; j <= std::min<unsigned>(m, static_cast<unsigned>(order)); ++j) {
      c[j] = from_bigint<S>(binomial(m, j)) * integer_power(z, m - j);
    }
    return Jet<S>(z, std::move(c));
  }

  if constexpr (is_exact_v<S>) {
    if (!is_zero(z)) {
      throw Error(ErrorCode::UnsupportedInRationalMode,
                  to_string(e) + " has no exact rational jet at z = " + z.str());
    }
    for (int j = 0; j <= order; ++j) {
      const auto uj = static_cast<unsigned>(j);
      switch (e.kind) {
        case ElementaryKind::Sin:
          if (j % 2 == 1) c[j] = Rational((j / 2) % 2 == 0 ? 1 : -1) * inverse_factorial<S>(uj);
          break;
        case ElementaryKind::Cos:
          if (j % 2 == 0) c[j] = Rational((j / 2) % 2 == 0 ? 1 : -1) * inverse_factorial<S>(uj);
          break;
        case ElementaryKind::Exp:
          c[j] = inverse_factorial<S>(uj);
          break;
        case ElementaryKind::Log1p:
          if (j >= 1) c[j] = make_rational(j % 2 == 1 ? 1 : -1, j);
          break;
        case ElementaryKind::Power:
          break;
      }
    }
  } else {
    switch (e.kind) {
      case ElementaryKind::Sin:
      case ElementaryKind::Cos: {
        // Derivatives of sin cycle through sin, cos, -sin, -cos.
        const double s = std::sin(z);
        const double co = std::cos(z);
        const double cycle[4] = {s, co, -s, -co};
        const int shift = e.kind == ElementaryKind::Cos ? 1 : 0;
        for (int j = 0; j <= order; ++j) c[j] = cycle[(j + shift) % 4] * inverse_factorial<S>(static_cast<unsigned>(j));
        break;
      }
      case ElementaryKind::Exp: {
        const double ez = std::exp(z);
        for (int j = 0; j <= order; ++j) c[j] = ez * inverse_factorial<S>(static_cast<unsigned>(j));
        break;
      }
      case ElementaryKind::Log1p: {
        if (!(z > -1.0)) throw Error(ErrorCode::DomainError, "log1p needs z > -1");
        c[0] = std::log1p(z);
        const double inv = 1.0 / (1.0 + z);
        double p = 1.0;
        for (int j = 1; j <= order; ++j) {
          p *= inv;
          c[j] = (j % 2 == 1 ? p : -p) / j;
        }
        break;
      }
      case ElementaryKind::Power:
        break;
    }
  }
  return Jet<S>(z, std::move(c));
}

/// Jet of F(g(z)) for an elementary F: expands F about g(z0) and substitutes
/// the nonconstant part of g by Horner's rule.
template <Scalar S>
Jet<S> compose(const Elementary& outer, const Jet<S>& inner) {
  const int n = inner.order();
  const Jet<S> fe = elementary_jet(outer, inner.value(), n);

  bool is_identity = n == 0 || is_zero(inner[1] - S(1));
  for (int j = 2; is_identity && j <= n; ++j) is_identity = is_zero(inner[j]);
  if (is_identity && inner.point() == inner.value()) return fe;

  std::vector<S> shift(inner.coefficients().begin(), inner.coefficients().end());
  shift[0] = S(0);
  const Jet<S> u(inner.point(), std::move(shift));
  Jet<S> result = Jet<S>::constant(inner.point(), fe[n], n);
  for (int j = n - 1; j >= 0; --j) {
    result = jet_mul(result, u);
    result[0] += fe[j];
  }
  return result;
}

}  // namespace ramanujan
