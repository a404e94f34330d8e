#include "scg/optimizers.hpp"

#include <chrono>
#include <cmath>

namespace scg {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from) {
  return std::chrono::duration<double, std::milli>(Clock::now() - from).count();
}

void validate_common(const OptimizerConfig& cfg, Index n, Index dim, const Vector& w0) {
  if (cfg.epochs < 1) throw std::invalid_argument("config: epochs must be >= 1");
  if (cfg.epoch_length < 1) throw std::invalid_argument("config: epoch_length must be >= 1");
  if (cfg.batch_size < 1 || cfg.batch_size > n)
    throw std::invalid_argument("config: need 1 <= batch_size <= n");
  if (!(cfg.gamma > 0.0) || cfg.gamma > 1.0)
    throw std::invalid_argument("config: gamma must be in (0, 1]");
  if (!(cfg.eta2 > 0.0)) throw std::invalid_argument("config: eta2 must be positive");
  if (!(cfg.metric_eta > 0.0)) throw std::invalid_argument("config: metric_eta must be positive");
  if (w0.size() != dim) throw std::invalid_argument("w0: dimension mismatch");
}

void validate_switching(const OptimizerConfig& cfg) {
  if (cfg.switch_period <= 1 || cfg.switch_period > cfg.epoch_length - 1)
    throw std::invalid_argument("config: switching needs 1 < t <= m-1");
  if (!(cfg.eta_fixed > 0.0)) throw std::invalid_argument("config: eta_fixed must be positive");
}

struct RunState {
  RunTrace trace;
  std::int64_t grad_evals = 0;
  std::int64_t ls_calls = 0;
  std::int64_t ls_grad_evals = 0;
  std::int64_t fallbacks = 0;
  double initial_objective = 0.0;
  Clock::time_point started = Clock::now();

  void record(const Problem& problem, const Regularizer& reg, int epoch, const Vector& w,
              const Vector& g_full, double metric_eta, double divergence_factor) {
    EpochRecord row;
    row.epoch = epoch;
    row.objective = problem.full_loss(w) + reg.value(w);
    row.gmap_sq = gradient_mapping(w, metric_eta, g_full, reg).squaredNorm();
    row.grad_evals = grad_evals;
    row.effective_passes =
        static_cast<double>(grad_evals) / static_cast<double>(problem.num_examples());
    row.ls_calls = ls_calls;
    row.ls_grad_evals = ls_grad_evals;
    row.fallbacks = fallbacks;
    row.wall_ms = elapsed_ms(started);
    trace.epochs.push_back(row);

    if (epoch == 0) {
      initial_objective = row.objective;
      return;
    }
    // A start at an exact minimizer would make a multiplicative bound vacuous.
    const double limit = divergence_factor * std::max(initial_objective, 1.0);
    if (!std::isfinite(row.objective) || row.objective > limit) {
      trace.final_point = w;
      throw DivergenceError("objective diverged at epoch " + std::to_string(epoch) + " (P=" +
                                std::to_string(row.objective) + ")",
                            trace);
    }
  }

  void track_beta_ratio(double v_new_sq, double v_old_sq) {
    if (v_old_sq >= kBetaDenominatorFloor)
      trace.empirical_beta_hat = std::max(trace.empirical_beta_hat, v_new_sq / v_old_sq);
  }
};

void notify(const IterationObserver& obs, int epoch, int step, const Vector& w, const Vector& v,
            const Vector& d, double beta, double eta, const SearchOutcome* search) {
  if (!obs) return;
  IterationEvent ev;
  ev.epoch = epoch;
  ev.step = step;
  ev.iterate = &w;
  ev.estimator = &v;
  ev.direction = &d;
  ev.beta = beta;
  ev.eta = eta;
  ev.search = search;
  obs(ev);
}

/// Wolfe search around the trial point w + t*d on a fixed batch. grad_w is the
/// batch gradient at w (reused by the estimator candidate), v the current
/// estimator. Returns the accepted outcome; counts trials into the state.
SearchOutcome run_wolfe(const Problem& problem, std::span<const Index> batch, const Vector& w,
                        const Vector& d, const Vector& grad_w, const Vector& v,
                        const WolfeParams& params, RunState& state) {
  const double phi0 = problem.batch_loss(w, batch);
  const auto phi = [&](double t) { return problem.batch_loss(w + t * d, batch); };
  const auto slope = [&](double t) {
    // Candidate estimator at the trial point, formed on the current batch.
    return (problem.batch_gradient(w + t * d, batch) - grad_w + v).dot(d);
  };
  const SearchOutcome out =
      wolfe_search(phi, slope, phi0, grad_w.dot(d), v.dot(d), params);
  state.ls_calls += 1;
  state.ls_grad_evals += static_cast<std::int64_t>(out.trials) * static_cast<std::int64_t>(batch.size());
  state.grad_evals += static_cast<std::int64_t>(out.trials) * static_cast<std::int64_t>(batch.size());
  state.fallbacks += out.fallback_used ? 1 : 0;
  return out;
}

std::map<std::string, double> echo_main(const OptimizerConfig& cfg, bool switching) {
  std::map<std::string, double> echo{
      {"S", static_cast<double>(cfg.epochs)},
      {"m", static_cast<double>(cfg.epoch_length)},
      {"b", static_cast<double>(cfg.batch_size)},
      {"gamma", cfg.gamma},
      {"eta2", cfg.eta2},
      {"c1", cfg.wolfe.c1},
      {"c2", cfg.wolfe.c2},
      {"rho", cfg.beta.rho},
      {"beta_cap", cfg.beta.cap},
      {"beta_formula", cfg.beta.kind == BetaFormula::Kind::kAfr ? 0.0 : 1.0},
      {"seed", static_cast<double>(cfg.seed)},
      {"metric_eta", cfg.metric_eta},
  };
  if (switching) {
    echo["t"] = static_cast<double>(cfg.switch_period);
    echo["eta_f"] = cfg.eta_fixed;
  }
  return echo;
}

/// Shared body of the two Wolfe-searched variants; restart_each_epoch selects
/// the deterministic-restart scheme (direction reset to the exact negative
/// full gradient every epoch) over the carried direction seed.
RunTrace run_conjugate_sarah(const Problem& problem, const Regularizer& reg,
                             const OptimizerConfig& cfg, const Vector& w0,
                             const IterationObserver& observer, bool restart_each_epoch) {
  const Index n = problem.num_examples();
  validate_common(cfg, n, problem.dim(), w0);

  WolfeParams wolfe = cfg.wolfe;
  wolfe.eta2 = cfg.eta2;

  RunState state;
  state.trace.algorithm = restart_each_epoch ? "acc-prox-cg-sarah-rs" : "acc-prox-cg-sarah";
  state.trace.config_echo = echo_main(cfg, /*switching=*/false);

  Rng rng(cfg.seed);
  BatchSampler sampler(n);

  Vector w = w0;
  Vector g_full = problem.full_gradient(w);  // metric now, first epoch's v0 next
  state.record(problem, reg, 0, w, g_full, cfg.metric_eta, cfg.divergence_factor);

  Vector seed_direction = -g_full;  // carried -h; valid for the first epoch either way
  Vector w_prev = w;
  std::vector<Vector> iterates;

  for (int s = 1; s <= cfg.epochs; ++s) {
    Vector v = g_full;
    state.grad_evals += n;
    Vector d = restart_each_epoch ? Vector(-v) : seed_direction;
    double beta = 0.0;
    if (v.dot(d) >= 0.0) {  // ascent guard: restart to the plain descent step
      d = -v;
    }
    if (cfg.sample_epoch_output) {
      iterates.clear();
      iterates.push_back(w);
    }

    double eta = cfg.eta2;
    SearchOutcome outcome;
    bool searched = false;
    if (v.dot(d) < 0.0) {
      // Epoch-start search on a fresh mini-batch; the estimator side of the
      // curvature condition still uses v0, the exact gradient. Searching the
      // full set instead would cost a whole pass per trial and dominate the
      // effective-pass accounting.
      const auto batch0 = sampler.sample(rng, cfg.batch_size);
      const Vector grad_b0 = problem.batch_gradient(w, batch0);
      state.grad_evals += cfg.batch_size;     // search setup gradient
      state.ls_grad_evals += cfg.batch_size;  // recorded as search cost
      outcome = run_wolfe(problem, batch0, w, d, grad_b0, v, wolfe, state);
      eta = outcome.eta;
      searched = true;
      state.trace.empirical_eta1 = std::min(state.trace.empirical_eta1, eta);
    }
    notify(observer, s, 0, w, v, d, beta, eta, searched ? &outcome : nullptr);

    Vector y = prox_step(w, d, eta, reg);
    w_prev = w;
    w = momentum_combine(w, y, cfg.gamma);
    if (cfg.sample_epoch_output) iterates.push_back(w);

    for (int k = 1; k <= cfg.epoch_length - 1; ++k) {
      const auto batch = sampler.sample(rng, cfg.batch_size);
      const Vector grad_cur = problem.batch_gradient(w, batch);
      const Vector grad_prev = problem.batch_gradient(w_prev, batch);
      state.grad_evals += 2 * cfg.batch_size;

      Vector v_new = sarah_update(v, grad_cur, grad_prev);
      state.track_beta_ratio(v_new.squaredNorm(), v.squaredNorm());
      beta = eval_beta(cfg.beta, v_new, v);
      d = direction_update(v_new, beta, d);
      v = std::move(v_new);
      if (v.dot(d) >= 0.0) {
        d = -v;
        beta = 0.0;
      }

      searched = false;
      if (v.dot(d) < 0.0) {
        outcome = run_wolfe(problem, batch, w, d, grad_cur, v, wolfe, state);
        eta = outcome.eta;
        searched = true;
        state.trace.empirical_eta1 = std::min(state.trace.empirical_eta1, eta);
      } else {
        eta = cfg.eta2;  // estimator vanished; no line to search
      }
      notify(observer, s, k, w, v, d, beta, eta, searched ? &outcome : nullptr);

      y = prox_step(w, d, eta, reg);
      w_prev = w;
      w = momentum_combine(w, y, cfg.gamma);
      if (cfg.sample_epoch_output) iterates.push_back(w);
    }

    if (cfg.epoch_length > 1) {
      // Deviation diagnostic at the estimator's own point (not charged to the run).
      const double dev = (v - problem.full_gradient(w_prev)).norm();
      state.trace.empirical_sigma = std::max(state.trace.empirical_sigma, dev);
    }
    if (cfg.sample_epoch_output) {
      const std::size_t pick = rng.below(iterates.size());
      w = iterates[pick];
    }
    seed_direction = -v;  // carried direction seed: last computed estimator
    g_full = problem.full_gradient(w);  // epoch metric; next epoch's v0
    state.record(problem, reg, s, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  }

  state.trace.final_point = w;
  return state.trace;
}

double objective_lipschitz(LossKind kind) { return lipschitz_constant(kind); }

Index floor_at_least_one(double x) { return std::max<Index>(1, static_cast<Index>(std::floor(x))); }

void validate_baseline(const BaselineConfig& cfg, const BaselineResolved& r, Index n,
                       Index dim, const Vector& w0) {
  if (cfg.epochs < 1) throw std::invalid_argument("baseline: epochs must be >= 1");
  if (r.batch_size < 1 || r.batch_size > n)
    throw std::invalid_argument("baseline: need 1 <= b <= n");
  if (r.outer_batch > n) throw std::invalid_argument("baseline: outer batch exceeds n");
  if (r.epoch_length < 1) throw std::invalid_argument("baseline: epoch_length must be >= 1");
  if (!(r.eta > 0.0)) throw std::invalid_argument("baseline: eta must be positive");
  if (!(r.gamma > 0.0) || r.gamma > 1.0)
    throw std::invalid_argument("baseline: gamma must be in (0, 1]");
  if (w0.size() != dim) throw std::invalid_argument("baseline: w0 dimension mismatch");
}

std::map<std::string, double> echo_baseline(const BaselineConfig& cfg, const BaselineResolved& r) {
  return {
      {"S", static_cast<double>(cfg.epochs)},   {"m", static_cast<double>(r.epoch_length)},
      {"b", static_cast<double>(r.batch_size)}, {"B", static_cast<double>(r.outer_batch)},
      {"eta", r.eta},                           {"gamma", r.gamma},
      {"seed", static_cast<double>(cfg.seed)},  {"metric_eta", cfg.metric_eta},
  };
}

}  // namespace

RunTrace run_acc_prox_cg_sarah(const Problem& problem, const Regularizer& reg,
                               const OptimizerConfig& cfg, const Vector& w0,
                               const IterationObserver& observer) {
  return run_conjugate_sarah(problem, reg, cfg, w0, observer, /*restart_each_epoch=*/false);
}

RunTrace run_acc_prox_cg_sarah_rs(const Problem& problem, const Regularizer& reg,
                                  const OptimizerConfig& cfg, const Vector& w0,
                                  const IterationObserver& observer) {
  return run_conjugate_sarah(problem, reg, cfg, w0, observer, /*restart_each_epoch=*/true);
}

RunTrace run_acc_prox_cg_sarah_st(const Problem& problem, const Regularizer& reg,
                                  const OptimizerConfig& cfg, const Vector& w0,
                                  const IterationObserver& observer) {
  const Index n = problem.num_examples();
  validate_common(cfg, n, problem.dim(), w0);
  validate_switching(cfg);

  WolfeParams wolfe = cfg.wolfe;
  wolfe.eta2 = cfg.eta2;
  const int t = cfg.switch_period;

  RunState state;
  state.trace.algorithm = "acc-prox-cg-sarah-st";
  state.trace.config_echo = echo_main(cfg, /*switching=*/true);

  Rng rng(cfg.seed);
  BatchSampler sampler(n);

  Vector w = w0;
  Vector g_full = problem.full_gradient(w);
  state.record(problem, reg, 0, w, g_full, cfg.metric_eta, cfg.divergence_factor);

  Vector seed_direction = -g_full;
  Vector w_prev = w;

  for (int s = 1; s <= cfg.epochs; ++s) {
    Vector v = g_full;
    state.grad_evals += n;
    Vector d = seed_direction;
    Vector v_ref = v;  // lag references: estimator/direction at the last conjugate step
    Vector d_ref = d;

    double eta = cfg.eta_fixed;
    notify(observer, s, 0, w, v, d, 0.0, eta, nullptr);
    Vector y = prox_step(w, d, eta, reg);
    w_prev = w;
    w = momentum_combine(w, y, cfg.gamma);

    for (int k = 1; k <= cfg.epoch_length - 1; ++k) {
      const auto batch = sampler.sample(rng, cfg.batch_size);
      const Vector grad_cur = problem.batch_gradient(w, batch);
      const Vector grad_prev = problem.batch_gradient(w_prev, batch);
      state.grad_evals += 2 * cfg.batch_size;

      Vector v_new = sarah_update(v, grad_cur, grad_prev);
      state.track_beta_ratio(v_new.squaredNorm(), v.squaredNorm());
      v = std::move(v_new);

      double beta = 0.0;
      if (k % t == 0) {
        beta = eval_beta(cfg.beta, v, v_ref);
        d = direction_update(v, beta, d_ref);
        v_ref = v;
        d_ref = d;
      } else {
        d = -v;
      }

      SearchOutcome outcome;
      bool searched = false;
      // The search prepares the estimator feeding the next conjugate step, so
      // it only runs when that step exists inside this epoch.
      if ((k + 1) % t == 0 && k + 1 <= cfg.epoch_length - 1) {
        const double lag_slope = v_ref.dot(d_ref);
        state.ls_calls += 1;
        searched = true;
        if (lag_slope < 0.0) {
          const auto slope = [&](double step) {
            return (problem.batch_gradient(w + step * d, batch) - grad_cur + v).dot(d_ref);
          };
          outcome = curvature_search(slope, lag_slope, wolfe);
          state.ls_grad_evals +=
              static_cast<std::int64_t>(outcome.trials) * static_cast<std::int64_t>(batch.size());
          state.grad_evals +=
              static_cast<std::int64_t>(outcome.trials) * static_cast<std::int64_t>(batch.size());
        } else {
          // Degenerate lagged slope: nothing to search, fall back to the cap.
          outcome.eta = cfg.eta2;
          outcome.eta_raw = cfg.eta2;
          outcome.satisfied_armijo = true;
          outcome.satisfied_curvature = false;
          outcome.fallback_used = true;
        }
        state.fallbacks += outcome.fallback_used ? 1 : 0;
        eta = outcome.eta;
        state.trace.empirical_eta1 = std::min(state.trace.empirical_eta1, eta);
      } else {
        eta = cfg.eta_fixed;
      }
      notify(observer, s, k, w, v, d, beta, eta, searched ? &outcome : nullptr);

      y = prox_step(w, d, eta, reg);
      w_prev = w;
      w = momentum_combine(w, y, cfg.gamma);
    }

    if (cfg.epoch_length > 1) {
      const double dev = (v - problem.full_gradient(w_prev)).norm();
      state.trace.empirical_sigma = std::max(state.trace.empirical_sigma, dev);
    }
    seed_direction = -v;
    g_full = problem.full_gradient(w);
    state.record(problem, reg, s, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  }

  state.trace.final_point = w;
  return state.trace;
}

RunTrace run_acc_prox_cg_sarah(const OptimizerConfig& cfg, const SparseDataset& ds, LossKind kind,
                               double lambda, const Vector& w0, const IterationObserver& observer) {
  LossProblem problem(ds, kind);
  return run_acc_prox_cg_sarah(problem, Regularizer{lambda}, cfg, w0, observer);
}

RunTrace run_acc_prox_cg_sarah_rs(const OptimizerConfig& cfg, const SparseDataset& ds,
                                  LossKind kind, double lambda, const Vector& w0,
                                  const IterationObserver& observer) {
  LossProblem problem(ds, kind);
  return run_acc_prox_cg_sarah_rs(problem, Regularizer{lambda}, cfg, w0, observer);
}

RunTrace run_acc_prox_cg_sarah_st(const OptimizerConfig& cfg, const SparseDataset& ds,
                                  LossKind kind, double lambda, const Vector& w0,
                                  const IterationObserver& observer) {
  LossProblem problem(ds, kind);
  return run_acc_prox_cg_sarah_st(problem, Regularizer{lambda}, cfg, w0, observer);
}

BaselineResolved resolve_prox_sarah(Index n, double lipschitz, const BaselineConfig& cfg) {
  BaselineResolved r;
  r.gamma = cfg.gamma > 0.0 ? cfg.gamma : 0.99;
  const double c = 2.0 / (3.0 * lipschitz * lipschitz * r.gamma * r.gamma);
  const double cbrt_n = std::cbrt(static_cast<double>(n));
  r.batch_size = cfg.batch_size > 0 ? cfg.batch_size : floor_at_least_one(cbrt_n / c);
  r.epoch_length = cfg.epoch_length > 0 ? cfg.epoch_length
                                        : static_cast<int>(floor_at_least_one(cbrt_n));
  r.eta = cfg.eta > 0.0 ? cfg.eta : 2.0 / (4.0 + lipschitz * r.gamma);
  r.batch_size = std::min(r.batch_size, n);
  return r;
}

BaselineResolved resolve_prox_spiderboost(Index n, double lipschitz, const BaselineConfig& cfg) {
  BaselineResolved r;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  r.batch_size = cfg.batch_size > 0 ? cfg.batch_size : floor_at_least_one(sqrt_n);
  r.epoch_length = cfg.epoch_length > 0 ? cfg.epoch_length
                                        : static_cast<int>(floor_at_least_one(sqrt_n));
  r.eta = cfg.eta > 0.0 ? cfg.eta : 1.0 / (2.0 * lipschitz);
  r.batch_size = std::min(r.batch_size, n);
  return r;
}

BaselineResolved resolve_prox_svrg_plus(Index n, double lipschitz, const BaselineConfig& cfg) {
  BaselineResolved r;
  r.outer_batch = cfg.outer_batch > 0 ? cfg.outer_batch
                                      : floor_at_least_one(static_cast<double>(n) / 5.0);
  r.batch_size = cfg.batch_size > 0
                     ? cfg.batch_size
                     : floor_at_least_one(std::pow(static_cast<double>(n), 2.0 / 3.0));
  r.batch_size = std::min(r.batch_size, n);
  r.outer_batch = std::min(r.outer_batch, n);
  r.epoch_length = cfg.epoch_length > 0
                       ? cfg.epoch_length
                       : static_cast<int>(floor_at_least_one(std::sqrt(static_cast<double>(r.batch_size))));
  r.eta = cfg.eta > 0.0 ? cfg.eta : 1.0 / (6.0 * lipschitz);
  return r;
}

RunTrace run_prox_sarah(const Problem& problem, const Regularizer& reg, const BaselineConfig& cfg,
                        double lipschitz, const Vector& w0) {
  const Index n = problem.num_examples();
  const BaselineResolved r = resolve_prox_sarah(n, lipschitz, cfg);
  validate_baseline(cfg, r, n, problem.dim(), w0);

  RunState state;
  state.trace.algorithm = "prox-sarah";
  state.trace.config_echo = echo_baseline(cfg, r);

  Rng rng(cfg.seed);
  BatchSampler sampler(n);
  Vector w = w0;
  Vector g_full = problem.full_gradient(w);
  state.record(problem, reg, 0, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  Vector w_prev = w;

  for (int s = 1; s <= cfg.epochs; ++s) {
    Vector v = g_full;
    state.grad_evals += n;
    Vector y = prox_step(w, -v, r.eta, reg);
    w_prev = w;
    w = momentum_combine(w, y, r.gamma);
    for (int k = 1; k <= r.epoch_length - 1; ++k) {
      const auto batch = sampler.sample(rng, r.batch_size);
      const Vector grad_cur = problem.batch_gradient(w, batch);
      const Vector grad_prev = problem.batch_gradient(w_prev, batch);
      state.grad_evals += 2 * r.batch_size;
      v = sarah_update(v, grad_cur, grad_prev);
      y = prox_step(w, -v, r.eta, reg);
      w_prev = w;
      w = momentum_combine(w, y, r.gamma);
    }
    g_full = problem.full_gradient(w);
    state.record(problem, reg, s, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  }
  state.trace.final_point = w;
  return state.trace;
}

RunTrace run_prox_spiderboost(const Problem& problem, const Regularizer& reg,
                              const BaselineConfig& cfg, double lipschitz, const Vector& w0) {
  const Index n = problem.num_examples();
  const BaselineResolved r = resolve_prox_spiderboost(n, lipschitz, cfg);
  validate_baseline(cfg, r, n, problem.dim(), w0);

  RunState state;
  state.trace.algorithm = "prox-spiderboost";
  state.trace.config_echo = echo_baseline(cfg, r);

  Rng rng(cfg.seed);
  BatchSampler sampler(n);
  Vector w = w0;
  Vector g_full = problem.full_gradient(w);
  state.record(problem, reg, 0, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  Vector w_prev = w;

  for (int s = 1; s <= cfg.epochs; ++s) {
    Vector v = g_full;
    state.grad_evals += n;
    w_prev = w;
    w = prox_step(w, -v, r.eta, reg);
    for (int k = 1; k <= r.epoch_length - 1; ++k) {
      const auto batch = sampler.sample(rng, r.batch_size);
      const Vector grad_cur = problem.batch_gradient(w, batch);
      const Vector grad_prev = problem.batch_gradient(w_prev, batch);
      state.grad_evals += 2 * r.batch_size;
      v = sarah_update(v, grad_cur, grad_prev);
      w_prev = w;
      w = prox_step(w, -v, r.eta, reg);
    }
    g_full = problem.full_gradient(w);
    state.record(problem, reg, s, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  }
  state.trace.final_point = w;
  return state.trace;
}

RunTrace run_prox_svrg_plus(const Problem& problem, const Regularizer& reg,
                            const BaselineConfig& cfg, double lipschitz, const Vector& w0) {
  const Index n = problem.num_examples();
  const BaselineResolved r = resolve_prox_svrg_plus(n, lipschitz, cfg);
  validate_baseline(cfg, r, n, problem.dim(), w0);
  if (r.outer_batch < 1) throw std::invalid_argument("prox_svrg_plus: outer batch must be >= 1");

  RunState state;
  state.trace.algorithm = "prox-svrg+";
  state.trace.config_echo = echo_baseline(cfg, r);

  Rng rng(cfg.seed);
  BatchSampler sampler(n);
  Vector w = w0;
  Vector g_full = problem.full_gradient(w);
  state.record(problem, reg, 0, w, g_full, cfg.metric_eta, cfg.divergence_factor);

  for (int s = 1; s <= cfg.epochs; ++s) {
    const Vector snapshot = w;
    const auto ref_batch = sampler.sample(rng, r.outer_batch);
    const Vector g_ref = problem.batch_gradient(snapshot, ref_batch);
    state.grad_evals += r.outer_batch;
    for (int k = 0; k < r.epoch_length; ++k) {
      const auto batch = sampler.sample(rng, r.batch_size);
      const Vector v = problem.batch_gradient(w, batch) -
                       problem.batch_gradient(snapshot, batch) + g_ref;
      state.grad_evals += 2 * r.batch_size;
      w = prox_step(w, -v, r.eta, reg);
    }
    g_full = problem.full_gradient(w);
    state.record(problem, reg, s, w, g_full, cfg.metric_eta, cfg.divergence_factor);
  }
  state.trace.final_point = w;
  return state.trace;
}

RunTrace run_prox_sarah(const BaselineConfig& cfg, const SparseDataset& ds, LossKind kind,
                        double lambda, const Vector& w0) {
  LossProblem problem(ds, kind);
  return run_prox_sarah(problem, Regularizer{lambda}, cfg, objective_lipschitz(kind), w0);
}

RunTrace run_prox_spiderboost(const BaselineConfig& cfg, const SparseDataset& ds, LossKind kind,
                              double lambda, const Vector& w0) {
  LossProblem problem(ds, kind);
  return run_prox_spiderboost(problem, Regularizer{lambda}, cfg, objective_lipschitz(kind), w0);
}

RunTrace run_prox_svrg_plus(const BaselineConfig& cfg, const SparseDataset& ds, LossKind kind,
                            double lambda, const Vector& w0) {
  LossProblem problem(ds, kind);
  return run_prox_svrg_plus(problem, Regularizer{lambda}, cfg, objective_lipschitz(kind), w0);
}

}  // namespace scg
