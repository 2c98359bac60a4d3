#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "ramanujan/oracle.hpp"

namespace ramanujan {

/// Factorial-scaled T-sequence at a point: scaled[k] = T_k(z) / k!, where
/// T_k = P_k f^(k+1) and P_k is the k-th derivative of 1/f.
template <Scalar S>
struct TSequence {
  S point;
  S f_value;
  std::vector<S> scaled;

  int order() const { return static_cast<int>(scaled.size()) - 1; }
  const S& t(int k) const { return scaled[static_cast<std::size_t>(k)]; }
  /// T_k = k! t_k.
  S unscaled(int k) const { return t(k) * from_bigint<S>(factorial(static_cast<unsigned>(k))); }
};

/// t_0 = 1, t_n = -sum_{k<n} t_k f^(n-k-1) a_(n-k), with a_j the jet
/// coefficients. Only nonnegative powers of f(z) appear, so f(z) = 0 is fine.
template <Scalar S>
TSequence<S> t_sequence_from_jet(const Jet<S>& jet, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "negative T-sequence order");
  if (jet.order() < n) throw Error(ErrorCode::OracleOrderInsufficient, "jet order below requested T order");
  const S& f = jet.value();
  std::vector<S> fpow(static_cast<std::size_t>(std::max(n, 1)), S(1));
  for (int i = 1; i < n; ++i) fpow[i] = fpow[i - 1] * f;

  std::vector<S> t(static_cast<std::size_t>(n) + 1, S(0));
  t[0] = S(1);
  for (int m = 1; m <= n; ++m) {
    S acc(0);
    for (int k = 0; k < m; ++k) {
      if (is_zero(t[k])) continue;
      acc += t[k] * fpow[m - k - 1] * jet[m - k];
    }
    t[m] = -acc;
  }
  return TSequence<S>{jet.point(), f, std::move(t)};
}

template <Scalar S>
TSequence<S> t_sequence(const DerivativeOracle<S>& oracle, const S& z, int n) {
  return t_sequence_from_jet(oracle(z, n), n);
}

/// z + f t_(n-1) / t_n, equal to z + n f T_(n-1) / T_n.
/// Returns z unchanged when f(z) = 0; throws StepUndefined when t_n = 0.
template <Scalar S>
S approximant_from(const TSequence<S>& ts, int n) {
  if (n < 1 || n > ts.order()) throw Error(ErrorCode::InvalidParameter, "approximant order out of range");
  if (is_zero(ts.f_value)) return ts.point;
  if (is_zero(ts.t(n))) throw Error(ErrorCode::StepUndefined, "t_" + std::to_string(n) + " vanishes");
  return ts.point + ts.f_value * ts.t(n - 1) / ts.t(n);
}

template <Scalar S>
S approximant_step(const DerivativeOracle<S>& oracle, const S& z, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "approximant needs order n >= 1");
  return approximant_from(t_sequence(oracle, z, n), n);
}

/// Approximants for n = 1..n_max from one shared T-sequence; entries with
/// t_n = 0 are empty.
template <Scalar S>
std::vector<std::optional<S>> convergent_table(const DerivativeOracle<S>& oracle, const S& z, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidParameter, "convergent table needs n_max >= 1");
  const TSequence<S> ts = t_sequence(oracle, z, n_max);
  std::vector<std::optional<S>> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    if (!is_zero(ts.f_value) && is_zero(ts.t(n))) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(approximant_from(ts, n));
    }
  }
  return out;
}

/// |n+1 - (n+1) t_(n-1) t_(n+1) / t_n^2|, the scaled form of
/// |n+1 - n T_(n-1) T_(n+1) / T_n^2|. Values below one indicate contraction.
template <Scalar S>
S convergence_indicator_from(const TSequence<S>& ts, int n) {
  if (n < 1 || n + 1 > ts.order()) throw Error(ErrorCode::InvalidParameter, "indicator needs T up to order n+1");
  if (is_zero(ts.t(n))) throw Error(ErrorCode::StepUndefined, "t_" + std::to_string(n) + " vanishes");
  const S np1(n + 1);
  return magnitude(np1 - np1 * ts.t(n - 1) * ts.t(n + 1) / (ts.t(n) * ts.t(n)));
}

template <Scalar S>
S convergence_indicator(const DerivativeOracle<S>& oracle, const S& z, int n) {
  return convergence_indicator_from(t_sequence(oracle, z, n + 1), n);
}

enum class Termination { ResidualMet, StepMet, MaxIterations, StepUndefined };

std::string_view to_string(Termination reason);

template <Scalar S>
struct SolverConfig {
  int order = 1;
  int max_iterations = 100;
  S residual_tolerance = default_residual_tolerance();
  S step_tolerance = S(0);
  bool check_condition = false;

  static S default_residual_tolerance() {
    if constexpr (is_exact_v<S>) {
      return Rational(BigInt(1), BigInt("1000000000000000000000000000000"));
    } else {
      return 1e-14;
    }
  }

  void validate() const {
    if (order < 1) throw Error(ErrorCode::InvalidParameter, "solver order must be >= 1");
    if (max_iterations < 1) throw Error(ErrorCode::InvalidParameter, "max_iterations must be positive");
    if (residual_tolerance < S(0) || step_tolerance < S(0)) {
      throw Error(ErrorCode::InvalidParameter, "tolerances must be nonnegative");
    }
  }
};

template <Scalar S>
struct Iterate {
  int index;
  S z;
  S residual;
  std::optional<S> condition;
};

template <Scalar S>
struct IterationTrace {
  std::vector<Iterate<S>> iterates;
  Termination termination = Termination::MaxIterations;

  const S& root() const { return iterates.back().z; }
  /// Number of steps taken (iterates after z_0).
  int steps() const { return static_cast<int>(iterates.size()) - 1; }
};

/// z_(m+1) = z_m + f(z_m) t_(n-1)(z_m) / t_n(z_m) with fixed n.
///
/// Stops on |f(z_m)| <= residual_tolerance, |z_(m+1) - z_m| <= step_tolerance,
/// or after max_iterations steps. A vanishing t_n ends the trace with
/// StepUndefined instead of throwing.
template <Scalar S>
IterationTrace<S> iterate(const DerivativeOracle<S>& oracle, const S& z0, const SolverConfig<S>& config) {
  config.validate();
  const int n = config.order;
  const int jet_order = config.check_condition ? n + 1 : n;

  IterationTrace<S> trace;
  S z = z0;
  for (int m = 0;; ++m) {
    const TSequence<S> ts = t_sequence(oracle, z, jet_order);
    Iterate<S> entry{m, z, ts.f_value, std::nullopt};
    if (config.check_condition && !is_zero(ts.t(n))) entry.condition = convergence_indicator_from(ts, n);
    trace.iterates.push_back(entry);

    if (magnitude(ts.f_value) <= config.residual_tolerance) {
      trace.termination = Termination::ResidualMet;
      break;
    }
    if (m >= config.max_iterations) {
      trace.termination = Termination::MaxIterations;
      break;
    }
    if (is_zero(ts.t(n))) {
      trace.termination = Termination::StepUndefined;
      break;
    }
    const S next = approximant_from(ts, n);
    const S step = magnitude(next - z);
    z = next;
    if (step <= config.step_tolerance) {
      const TSequence<S> last = t_sequence(oracle, z, jet_order);
      Iterate<S> final_entry{m + 1, z, last.f_value, std::nullopt};
      if (config.check_condition && !is_zero(last.t(n))) final_entry.condition = convergence_indicator_from(last, n);
      trace.iterates.push_back(final_entry);
      trace.termination = magnitude(last.f_value) <= config.residual_tolerance ? Termination::ResidualMet
                                                                                : Termination::StepMet;
      break;
    }
  }
  return trace;
}

/// Estimated convergence order from the last triple of consecutive iterates
/// whose errors |z_m - root| exceed `noise_floor`:
/// p = log|e_(m+1)/e_m| / log|e_m/e_(m-1)|.
template <Scalar S>
double empirical_order(const IterationTrace<S>& trace, const S& root, double noise_floor) {
  std::vector<double> errors;
  errors.reserve(trace.iterates.size());
  for (const auto& it : trace.iterates) errors.push_back(std::abs(to_double(it.z - root)));

  for (std::size_t end = errors.size(); end >= 3; --end) {
    const double e0 = errors[end - 3];
    const double e1 = errors[end - 2];
    const double e2 = errors[end - 1];
    if (e0 <= noise_floor || e1 <= noise_floor || e2 <= noise_floor) continue;
    if (!std::isfinite(e0) || !std::isfinite(e1) || !std::isfinite(e2)) continue;
    const double denom = std::log(e1 / e0);
    if (denom == 0.0) continue;
    return std::log(e2 / e1) / denom;
  }
  throw Error(ErrorCode::InsufficientData, "need three consecutive iterates with resolvable error");
}

/// Default noise floor: rounding level for doubles, nothing for rationals.
template <Scalar S>
double empirical_order(const IterationTrace<S>& trace, const S& root) {
  double floor = 0.0;
  if constexpr (!is_exact_v<S>) floor = 1e-13 * std::max(1.0, std::abs(root));
  return empirical_order(trace, root, floor);
}

/// Closed-form Newton step z - f/f'.
template <Scalar S>
S reference_newton_step(const DerivativeOracle<S>& oracle, const S& z) {
  const Jet<S> j = oracle(z, 1);
  if (is_zero(j[1])) throw Error(ErrorCode::StepUndefined, "f'(z) = 0");
  return z - j.value() / j[1];
}

/// Closed-form Halley step z - (f/f') / (1 - f f'' / (2 f'^2)).
template <Scalar S>
S reference_halley_step(const DerivativeOracle<S>& oracle, const S& z) {
  const Jet<S> j = oracle(z, 2);
  const S f = j.value();
  const S d1 = j.derivative(1);
  const S d2 = j.derivative(2);
  if (is_zero(d1)) throw Error(ErrorCode::StepUndefined, "f'(z) = 0");
  const S denom = S(1) - f * d2 / (S(2) * d1 * d1);
  if (is_zero(denom)) throw Error(ErrorCode::StepUndefined, "Halley denominator vanishes");
  return z - (f / d1) / denom;
}

/// Unscaled P_k(z), the k-th derivative of 1/f, by the direct recursion
/// P_0 = 1/f, P_n = -(1/f) sum_{k<n} C(n,k) P_k f^(n-k).
/// Divides by f(z) at every order, so it loses accuracy near a root; kept
/// for cross-checking the T-sequence only.
template <Scalar S>
std::vector<S> p_sequence_unscaled(const DerivativeOracle<S>& oracle, const S& z, int n) {
  const Jet<S> jet = oracle(z, n);
  if (is_zero(jet.value())) throw Error(ErrorCode::DivisionByZeroAtPoint, "f(z) = 0");
  const S inv = S(1) / jet.value();
  std::vector<S> p(static_cast<std::size_t>(n) + 1, S(0));
  p[0] = inv;
  for (int m = 1; m <= n; ++m) {
    S acc(0);
    for (int k = 0; k < m; ++k) {
      acc += from_bigint<S>(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k))) * p[k] *
             jet.derivative(m - k);
    }
    p[m] = -inv * acc;
  }
  return p;
}

}  // namespace ramanujan
