#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ramanujan/scalar.hpp"
#include "ramanujan/error.hpp"

namespace ramanujan {

/// sum_{k>=1} A_k z^k = 1, truncated at K; coefficients[0] holds A_1.
template <Scalar S>
class PowerSeriesEquation {
 public:
  explicit PowerSeriesEquation(std::vector<S> coefficients) : coeffs_(std::move(coefficients)) {
    bool any = false;
    for (const auto& a : coeffs_) any = any || !is_zero(a);
    if (!any) throw Error(ErrorCode::InvalidParameter, "power-series equation needs a nonzero coefficient");
  }

  /// A_k, zero beyond the stored length.
  S a(int k) const {
    return k >= 1 && k <= static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k - 1)] : S(0);
  }
  int length() const { return static_cast<int>(coeffs_.size()); }

 private:
  std::vector<S> coeffs_;
};

/// P_1 = 1, P_n = sum_{j=1..n-1} A_j P_(n-j). Element i holds P_(i+1).
template <Scalar S>
std::vector<S> p_sequence(const PowerSeriesEquation<S>& eq, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidParameter, "p_sequence needs n_max >= 1");
  std::vector<S> p(static_cast<std::size_t>(n_max), S(0));
  p[0] = S(1);
  for (int n = 2; n <= n_max; ++n) {
    S acc(0);
    for (int j = 1; j <= std::min(n - 1, eq.length()); ++j) acc += eq.a(j) * p[n - j - 1];
    p[n - 1] = acc;
  }
  return p;
}

/// P_n / P_(n+1) for n = 1..n_max-1; empty where P_(n+1) = 0.
template <Scalar S>
std::vector<std::optional<S>> root_convergents(const PowerSeriesEquation<S>& eq, int n_max) {
  if (n_max < 2) throw Error(ErrorCode::InvalidParameter, "root_convergents needs n_max >= 2");
  const std::vector<S> p = p_sequence(eq, n_max);
  std::vector<std::optional<S>> out;
  for (int n = 1; n < n_max; ++n) {
    if (is_zero(p[n])) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(p[n - 1] / p[n]);
    }
  }
  return out;
}

/// Symptoms of a violated smallest-root hypothesis over the trailing window.
struct SeriesDiagnostic {
  int window = 0;           // defined ratios examined
  int sign_changes = 0;     // in successive differences
  bool non_monotone = false;  // |difference| failed to shrink somewhere
  bool irregular() const { return sign_changes > 0 || non_monotone; }
};

template <Scalar S>
SeriesDiagnostic oscillation_diagnostic(const std::vector<std::optional<S>>& convergents, int window = 5) {
  std::vector<S> tail;
  for (auto it = convergents.rbegin(); it != convergents.rend() && static_cast<int>(tail.size()) < window; ++it) {
    if (*it) tail.push_back(**it);
  }
  std::reverse(tail.begin(), tail.end());

  SeriesDiagnostic d;
  d.window = static_cast<int>(tail.size());
  std::vector<S> diffs;
  for (std::size_t i = 1; i < tail.size(); ++i) diffs.push_back(tail[i] - tail[i - 1]);
  for (std::size_t i = 1; i < diffs.size(); ++i) {
    if ((diffs[i] < S(0) && diffs[i - 1] > S(0)) || (diffs[i] > S(0) && diffs[i - 1] < S(0))) ++d.sign_changes;
    if (magnitude(diffs[i]) > magnitude(diffs[i - 1])) d.non_monotone = true;
  }
  return d;
}

}  // namespace ramanujan
