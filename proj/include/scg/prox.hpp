#pragma once

#include "scg/dataset.hpp"

namespace scg {

/// l1 penalty weight. lambda = 0 means no regularizer (identity prox).
struct Regularizer {
  double lambda = 0.0;

  double value(const Vector& w) const { return lambda == 0.0 ? 0.0 : lambda * w.lpNorm<1>(); }
};

/// Entrywise sign(v_j) * max(|v_j| - theta, 0); the prox of theta*||.||_1.
Vector soft_threshold(const Vector& v, double theta);

/// prox_{eta*phi}(w + eta * dvec). With lambda = 0 this is exactly w + eta*dvec.
Vector prox_step(const Vector& w, const Vector& dvec, double eta, const Regularizer& reg);

/// (1/eta) * (w - prox_{eta*phi}(w - eta*grad)); the stationarity measure.
/// Reduces exactly to grad when lambda = 0.
Vector gradient_mapping(const Vector& w, double eta, const Vector& grad, const Regularizer& reg);

/// (1-gamma)*w + gamma*y with gamma in (0, 1]. gamma = 1 returns y exactly.
Vector momentum_combine(const Vector& w, const Vector& y, double gamma);

}  // namespace scg
