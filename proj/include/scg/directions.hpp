#pragma once

#include <optional>

#include "scg/losses.hpp"

namespace scg {

/// Recursive variance-reduced estimator step:
/// v_k = grad_cur - grad_prev + v_prev, both batch gradients on the same batch.
Vector sarah_update(const Vector& v_prev, const Vector& grad_cur, const Vector& grad_prev);

/// Reference norms below this floor make the conjugate-parameter ratios
/// meaningless; the formulas return 0 (a restart) instead.
inline constexpr double kBetaDenominatorFloor = 1e-24;

/// Fletcher-Reeves ratio ||v_cur||^2 / ||v_ref||^2.
double beta_fr(const Vector& v_cur, const Vector& v_ref);

/// Adaptive FR: min(cap, rho * beta_fr).
double beta_afr(const Vector& v_cur, const Vector& v_ref, double rho, double cap);

/// FR-PR hybrid: Polak-Ribiere value clamped into [-beta_fr, beta_fr].
double beta_frpr(const Vector& v_cur, const Vector& v_ref);

/// Conjugate-parameter selection. The same formulas serve the lagged variants:
/// pass the lag-t estimator as v_ref.
struct BetaFormula {
  enum class Kind { kAfr, kFrpr };
  Kind kind = Kind::kAfr;
  double rho = 0.8;    // adaptive FR multiplier, > 0
  double cap = 0.9;    // adaptive FR upper bound, > 0
  /// Optional guard for the FR-PR hybrid: |beta| above this resets to 0.
  std::optional<double> frpr_cap;
};

double eval_beta(const BetaFormula& formula, const Vector& v_cur, const Vector& v_ref);

/// d_k = -v + beta * d_ref. beta = 0 restarts to the plain descent step.
Vector direction_update(const Vector& v, double beta, const Vector& d_ref);

/// Exact second moment of the estimator increment over every size-b batch,
/// next to its closed-form decomposition
///   n(b-1)/(b(n-1)) * ||grad f(w_cur)-grad f(w_prev)||^2
///   + (n-b)/(b(n-1)) * (1/n) sum_i ||grad f_i(w_cur)-grad f_i(w_prev)||^2.
/// Enumerates all C(n, b) batches; guarded to n <= 12.
struct IncrementVariance {
  double enumerated = 0.0;
  double closed_form = 0.0;
};
IncrementVariance batch_increment_variance(const SparseDataset& ds, LossKind kind,
                                           const Vector& w_cur, const Vector& w_prev, Index b);

}  // namespace scg
