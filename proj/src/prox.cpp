#include "scg/prox.hpp"

#include <cmath>
#include <stdexcept>

namespace scg {

Vector soft_threshold(const Vector& v, double theta) {
  if (theta < 0.0 || std::isnan(theta)) throw std::invalid_argument("soft_threshold: theta must be >= 0");
  Vector out(v.size());
  for (Index j = 0; j < v.size(); ++j) {
    const double mag = std::abs(v[j]) - theta;
    out[j] = mag > 0.0 ? std::copysign(mag, v[j]) : 0.0;
  }
  return out;
}

Vector prox_step(const Vector& w, const Vector& dvec, double eta, const Regularizer& reg) {
  if (!(eta > 0.0)) throw std::invalid_argument("prox_step: eta must be positive");
  if (w.size() != dvec.size()) throw std::invalid_argument("prox_step: dimension mismatch");
  return soft_threshold(w + eta * dvec, eta * reg.lambda);
}

Vector gradient_mapping(const Vector& w, double eta, const Vector& grad, const Regularizer& reg) {
  if (!(eta > 0.0)) throw std::invalid_argument("gradient_mapping: eta must be positive");
  if (w.size() != grad.size()) throw std::invalid_argument("gradient_mapping: dimension mismatch");
  if (reg.lambda == 0.0) return grad;  // identity prox; keep the reduction exact
  const Vector moved = soft_threshold(w - eta * grad, eta * reg.lambda);
  return (w - moved) / eta;
}

Vector momentum_combine(const Vector& w, const Vector& y, double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw std::invalid_argument("momentum_combine: gamma must be in (0, 1]");
  if (w.size() != y.size()) throw std::invalid_argument("momentum_combine: dimension mismatch");
  if (gamma == 1.0) return y;
  return (1.0 - gamma) * w + gamma * y;
}

}  // namespace scg
