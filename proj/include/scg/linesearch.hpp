#pragma once

#include <functional>
#include <stdexcept>

namespace scg {

/// Step-size search parameters. Requires 0 < c1 < c2 < 1.
struct WolfeParams {
  double c1 = 1e-4;      // sufficient-decrease constant
  double c2 = 0.1;       // curvature constant
  double eta2 = 0.5;     // hard cap applied to the returned step
  double eta_init = 0.0; // first trial step; <= 0 means start at eta2
  int max_bracket = 20;  // trial budget for the bracketing phase
  int max_zoom = 30;     // trial budget for the bisection phase
};

struct SearchOutcome {
  double eta = 0.0;                 // min(eta_raw, eta2); the step to take
  double eta_raw = 0.0;             // accepted trial before the cap
  bool satisfied_armijo = false;    // sufficient decrease held at eta_raw
  bool satisfied_curvature = false; // curvature condition held at eta_raw
  int trials = 0;                   // gradient evaluations spent
  bool fallback_used = false;       // budget exhausted; eta_raw = eta2 with honest flags
};

/// Every evaluated trial produced a non-finite objective; no usable step exists.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strong Wolfe search on the batch objective, bracketing + bisection zoom.
///
///   phi(t)   = batch objective at w + t*d
///   slope(t) = inner product of the candidate estimator at w + t*d with d;
///              the candidate is formed on the current batch, the only one
///              known at search time (see README, step-size search notes)
///   phi0         = phi(0)
///   armijo_slope = <batch gradient at w, d>   (sufficient-decrease line)
///   slope0       = slope(0) = <v, d>, must be negative
///
/// Accepts t with phi(t) <= phi0 + c1*t*armijo_slope and |slope(t)| <= -c2*slope0.
/// Each trial costs one batch-gradient evaluation; trials <= max_bracket + max_zoom.
/// On budget exhaustion returns eta2 with flags reporting what actually held there.
/// A non-finite phi at a trial shrinks the bracket; throws SearchFailure if every
/// trial, including the fallback, was non-finite.
SearchOutcome wolfe_search(const std::function<double(double)>& phi,
                           const std::function<double(double)>& slope, double phi0,
                           double armijo_slope, double slope0, const WolfeParams& params);

/// Curvature-only search: finds t with |slope(t)| <= -c2*lag_slope, where
/// slope(t) pairs the candidate estimator at w + t*d with a lagged direction
/// and lag_slope = <v_lag, d_lag> must be negative. Same budgets, cap and
/// fallback behavior as wolfe_search; the Armijo flag is vacuously true.
SearchOutcome curvature_search(const std::function<double(double)>& slope, double lag_slope,
                               const WolfeParams& params);

}  // namespace scg
