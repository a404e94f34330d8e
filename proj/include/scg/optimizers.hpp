#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "scg/directions.hpp"
#include "scg/linesearch.hpp"
#include "scg/problem.hpp"
#include "scg/prox.hpp"
#include "scg/rng.hpp"

namespace scg {

/// Tunables for the conjugate SARAH family. Field names follow the usual
/// stochastic-optimizer conventions: epochs S, epoch length m, batch size b.
struct OptimizerConfig {
  int epochs = 10;              // S
  int epoch_length = 10;        // m; inner steps run k = 0..m-1
  Index batch_size = 1;         // b
  double gamma = 1.0;           // momentum weight in (0, 1]
  /// Step cap and search fallback. The searched steps on saturating losses can
  /// be large and honest; a tight cap turns the method into fixed-step descent,
  /// so the default only reins in outliers.
  double eta2 = 5.0;
  BetaFormula beta;             // conjugate-parameter formula
  WolfeParams wolfe;            // c1/c2/budgets; eta2 here is kept in sync
  int switch_period = 0;        // t, switching variant only; 1 < t <= m-1
  double eta_fixed = 0.0;       // fixed step of the switching variant's plain steps
  std::uint64_t seed = 0;
  double metric_eta = 0.5;      // gradient-mapping step used for reporting only
  bool sample_epoch_output = false;  // epoch output drawn uniformly from the epoch iterates
  double divergence_factor = 1e8;
};

/// Per-epoch metrics. All counters are cumulative from the start of the run.
struct EpochRecord {
  int epoch = 0;
  double objective = 0.0;          // P at the epoch output
  double gmap_sq = 0.0;            // squared gradient-mapping norm at metric_eta
  double effective_passes = 0.0;   // grad_evals / n
  std::int64_t grad_evals = 0;     // individual gradient evaluations, searches included
  std::int64_t ls_calls = 0;
  std::int64_t ls_grad_evals = 0;  // gradient evaluations spent inside searches
  std::int64_t fallbacks = 0;
  double wall_ms = 0.0;
};

struct RunTrace {
  std::string algorithm;
  std::vector<EpochRecord> epochs;  // epochs[0] records the initial point
  /// Largest observed ||v_k||^2 / ||v_{k-1}||^2 across inner steps.
  double empirical_beta_hat = 0.0;
  /// Smallest step accepted by a search (capped value); +inf if none ran.
  double empirical_eta1 = std::numeric_limits<double>::infinity();
  /// Largest end-of-epoch deviation ||v - grad f|| at the estimator's point.
  double empirical_sigma = 0.0;
  std::map<std::string, double> config_echo;
  Vector final_point;
};

/// Objective blew past divergence_factor times its initial value or went
/// non-finite; carries everything recorded up to that epoch.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, RunTrace partial)
      : std::runtime_error(what), trace(std::move(partial)) {}
  RunTrace trace;
};

/// Test/diagnostic hook invoked once per inner step with read-only state.
struct IterationEvent {
  int epoch = 0;
  int step = 0;                         // k, 0-based within the epoch
  const Vector* iterate = nullptr;      // w_k, before the step
  const Vector* estimator = nullptr;    // v_k
  const Vector* direction = nullptr;    // d_k
  double beta = 0.0;                    // conjugate parameter applied (0 when none)
  double eta = 0.0;                     // step actually taken
  const SearchOutcome* search = nullptr;  // null when no search ran this step
};
using IterationObserver = std::function<void(const IterationEvent&)>;

/// Momentum proximal conjugate SARAH: full gradient at each epoch start,
/// recursive mini-batch estimator inside, conjugate directions with a Wolfe
/// search on every step, direction seed carried across epochs.
RunTrace run_acc_prox_cg_sarah(const Problem& problem, const Regularizer& reg,
                               const OptimizerConfig& cfg, const Vector& w0,
                               const IterationObserver& observer = {});

/// Same scheme with a deterministic restart: every epoch starts from the exact
/// negative full gradient instead of the carried estimator.
RunTrace run_acc_prox_cg_sarah_rs(const Problem& problem, const Regularizer& reg,
                                  const OptimizerConfig& cfg, const Vector& w0,
                                  const IterationObserver& observer = {});

/// Switching variant: conjugate directions (with lag-t formulas) only every t
/// steps, plain estimator steps at a fixed step size otherwise, and a
/// curvature-only search right before each conjugate step.
RunTrace run_acc_prox_cg_sarah_st(const Problem& problem, const Regularizer& reg,
                                  const OptimizerConfig& cfg, const Vector& w0,
                                  const IterationObserver& observer = {});

// Dataset-facing wrappers.
RunTrace run_acc_prox_cg_sarah(const OptimizerConfig& cfg, const SparseDataset& ds, LossKind kind,
                               double lambda, const Vector& w0,
                               const IterationObserver& observer = {});
RunTrace run_acc_prox_cg_sarah_rs(const OptimizerConfig& cfg, const SparseDataset& ds,
                                  LossKind kind, double lambda, const Vector& w0,
                                  const IterationObserver& observer = {});
RunTrace run_acc_prox_cg_sarah_st(const OptimizerConfig& cfg, const SparseDataset& ds,
                                  LossKind kind, double lambda, const Vector& w0,
                                  const IterationObserver& observer = {});

/// Baseline configuration. Zero-valued fields are derived from the usual
/// published rules given (n, L); see the resolve_* helpers.
struct BaselineConfig {
  int epochs = 10;
  std::uint64_t seed = 0;
  double metric_eta = 0.5;
  double divergence_factor = 1e8;
  Index batch_size = 0;   // b
  Index outer_batch = 0;  // reference batch of the SVRG-type estimator
  int epoch_length = 0;   // m
  double eta = 0.0;
  double gamma = 0.0;     // momentum weight (ProxSARAH only)
};

struct BaselineResolved {
  Index batch_size = 0;
  Index outer_batch = 0;
  int epoch_length = 0;
  double eta = 0.0;
  double gamma = 1.0;
};

/// gamma = 0.99, eta = 2/(4+L*gamma), b = floor(n^(1/3)/C) with
/// C = 2/(3 L^2 gamma^2), m = floor(n^(1/3)); every piece floored to >= 1.
BaselineResolved resolve_prox_sarah(Index n, double lipschitz, const BaselineConfig& cfg);
/// b = m = floor(sqrt(n)), eta = 1/(2L).
BaselineResolved resolve_prox_spiderboost(Index n, double lipschitz, const BaselineConfig& cfg);
/// outer batch floor(n/5), b = floor(n^(2/3)), m = floor(sqrt(b)), eta = 1/(6L).
BaselineResolved resolve_prox_svrg_plus(Index n, double lipschitz, const BaselineConfig& cfg);

RunTrace run_prox_sarah(const Problem& problem, const Regularizer& reg, const BaselineConfig& cfg,
                        double lipschitz, const Vector& w0);
RunTrace run_prox_spiderboost(const Problem& problem, const Regularizer& reg,
                              const BaselineConfig& cfg, double lipschitz, const Vector& w0);
RunTrace run_prox_svrg_plus(const Problem& problem, const Regularizer& reg,
                            const BaselineConfig& cfg, double lipschitz, const Vector& w0);

RunTrace run_prox_sarah(const BaselineConfig& cfg, const SparseDataset& ds, LossKind kind,
                        double lambda, const Vector& w0);
RunTrace run_prox_spiderboost(const BaselineConfig& cfg, const SparseDataset& ds, LossKind kind,
                              double lambda, const Vector& w0);
RunTrace run_prox_svrg_plus(const BaselineConfig& cfg, const SparseDataset& ds, LossKind kind,
                            double lambda, const Vector& w0);

}  // namespace scg
