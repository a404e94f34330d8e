#include "scg/linesearch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scg {

namespace {

void validate(const WolfeParams& p) {
  if (!(p.c1 > 0.0 && p.c1 < p.c2 && p.c2 < 1.0))
    throw std::invalid_argument("WolfeParams: need 0 < c1 < c2 < 1");
  if (!(p.eta2 > 0.0)) throw std::invalid_argument("WolfeParams: eta2 must be positive");
  if (p.max_bracket < 1 || p.max_zoom < 1)
    throw std::invalid_argument("WolfeParams: budgets must be positive");
}

double initial_trial(const WolfeParams& p) { return p.eta_init > 0.0 ? p.eta_init : p.eta2; }

SearchOutcome accepted(double alpha, int trials, const WolfeParams& p) {
  SearchOutcome out;
  out.eta_raw = alpha;
  out.eta = std::min(alpha, p.eta2);
  out.satisfied_armijo = true;
  out.satisfied_curvature = true;
  out.trials = trials;
  out.fallback_used = false;
  return out;
}

}  // namespace

SearchOutcome wolfe_search(const std::function<double(double)>& phi,
                           const std::function<double(double)>& slope, double phi0,
                           double armijo_slope, double slope0, const WolfeParams& params) {
  validate(params);
  if (!(slope0 < 0.0))
    throw std::invalid_argument("wolfe_search: estimator slope at 0 must be negative");
  if (!std::isfinite(phi0)) throw SearchFailure("wolfe_search: objective not finite at step 0");

  const int total_budget = params.max_bracket + params.max_zoom;
  const double curvature_bound = -params.c2 * slope0;
  int trials = 0;
  bool any_finite = false;

  const auto armijo_ok = [&](double alpha, double value) {
    return value <= phi0 + params.c1 * alpha * armijo_slope;
  };
  const auto evaluate = [&](double alpha, double& value, double& psi) {
    value = phi(alpha);
    psi = std::isfinite(value) ? slope(alpha) : std::numeric_limits<double>::quiet_NaN();
    ++trials;
    if (std::isfinite(value)) any_finite = true;
  };

  const auto fallback = [&]() {
    double value = 0.0, psi = 0.0;
    evaluate(params.eta2, value, psi);
    if (!any_finite) throw SearchFailure("wolfe_search: objective not finite at every trial");
    SearchOutcome out;
    out.eta_raw = params.eta2;
    out.eta = params.eta2;
    out.satisfied_armijo = std::isfinite(value) && armijo_ok(params.eta2, value);
    out.satisfied_curvature = std::isfinite(psi) && std::abs(psi) <= curvature_bound;
    out.trials = trials;
    out.fallback_used = true;
    return out;
  };

  // Bisect inside (lo, hi); lo satisfies sufficient decrease and its slope
  // points into the interval. Steering uses the estimator slope rather than
  // objective comparisons: near the slope zero the objective differences sink
  // below fp resolution (~sqrt(eps) of its scale) while the slope sign stays
  // clean, and tight c2 values need exactly that resolution.
  const auto zoom = [&](double lo, double hi) {
    while (trials < total_budget - 1) {
      const double alpha = 0.5 * (lo + hi);
      if (alpha == lo || alpha == hi) break;  // interval below fp resolution
      double value = 0.0, psi = 0.0;
      evaluate(alpha, value, psi);
      if (!std::isfinite(value) || !armijo_ok(alpha, value)) {
        hi = alpha;
        continue;
      }
      if (std::abs(psi) <= curvature_bound) return accepted(alpha, trials, params);
      if (psi * (hi - lo) >= 0.0) hi = lo;
      lo = alpha;
    }
    return fallback();
  };

  double prev_alpha = 0.0;
  double prev_phi = phi0;
  double alpha = initial_trial(params);
  bool first = true;
  while (trials < params.max_bracket) {
    double value = 0.0, psi = 0.0;
    evaluate(alpha, value, psi);
    if (!std::isfinite(value) || !armijo_ok(alpha, value) || (!first && value >= prev_phi))
      return zoom(prev_alpha, alpha);
    if (std::abs(psi) <= curvature_bound) return accepted(alpha, trials, params);
    if (psi >= 0.0) return zoom(alpha, prev_alpha);
    prev_alpha = alpha;
    prev_phi = value;
    alpha *= 2.0;
    first = false;
  }
  return fallback();
}

SearchOutcome curvature_search(const std::function<double(double)>& slope, double lag_slope,
                               const WolfeParams& params) {
  validate(params);
  if (!(lag_slope < 0.0))
    throw std::invalid_argument("curvature_search: lagged slope must be negative");

  const int total_budget = params.max_bracket + params.max_zoom;
  const double bound = -params.c2 * lag_slope;
  int trials = 0;
  bool any_finite = false;

  const auto evaluate = [&](double eta) {
    const double s = slope(eta);
    ++trials;
    if (std::isfinite(s)) any_finite = true;
    return s;
  };

  const auto fallback = [&]() {
    const double s = evaluate(params.eta2);
    if (!any_finite) throw SearchFailure("curvature_search: estimator slope not finite at every trial");
    SearchOutcome out;
    out.eta_raw = params.eta2;
    out.eta = params.eta2;
    out.satisfied_armijo = true;  // no sufficient-decrease condition in this search
    out.satisfied_curvature = std::isfinite(s) && std::abs(s) <= bound;
    out.trials = trials;
    out.fallback_used = true;
    return out;
  };

  // Bisect between a (slope below -bound) and b (slope above +bound or not finite).
  const auto bisect = [&](double a, double b) {
    while (trials < total_budget - 1) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      const double s = evaluate(mid);
      if (std::isfinite(s) && std::abs(s) <= bound) return accepted(mid, trials, params);
      if (std::isfinite(s) && s < -bound) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return fallback();
  };

  double eta = initial_trial(params);
  double s = evaluate(eta);
  if (std::isfinite(s) && std::abs(s) <= bound) return accepted(eta, trials, params);

  if (std::isfinite(s) && s < -bound) {
    // Too negative: expand until the band is entered or crossed.
    while (trials < params.max_bracket) {
      const double lo = eta;
      eta *= 2.0;
      s = evaluate(eta);
      if (std::isfinite(s) && std::abs(s) <= bound) return accepted(eta, trials, params);
      if (!std::isfinite(s) || s > bound) return bisect(lo, eta);
    }
  } else {
    // Too positive (or not finite): shrink toward zero.
    while (trials < params.max_bracket) {
      const double hi = eta;
      eta *= 0.5;
      s = evaluate(eta);
      if (std::isfinite(s) && std::abs(s) <= bound) return accepted(eta, trials, params);
      if (std::isfinite(s) && s < -bound) return bisect(eta, hi);
    }
  }
  return fallback();
}

}  // namespace scg
